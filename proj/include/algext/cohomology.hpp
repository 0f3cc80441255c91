#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "algext/lie.hpp"

namespace algext {

// Strictly increasing p-tuples over {0..n-1} in lexicographic order, with
// O(1) rank lookup through bitmasks (n <= 64).
class TupleIndex {
 public:
  TupleIndex(std::size_t n, int p);

  std::size_t count() const { return tuples_.size(); }
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
  std::size_t rank(std::uint64_t mask) const;

  static std::uint64_t mask_of(const std::vector<std::size_t>& tuple);

 private:
  std::vector<std::vector<std::size_t>> tuples_;
  std::unordered_map<std::uint64_t, std::size_t> rank_;
};

// Alternating p-cochain with module coefficients. Coordinates are indexed by
// (increasing basis tuple, coefficient index): coords[tuple_rank * a_dim + s].
struct Cochain {
  int p = 0;
  std::size_t g_dim = 0;
  std::size_t a_dim = 0;
  std::vector<Rational> coords;
};

Cochain zero_cochain(int p, std::size_t g_dim, std::size_t a_dim);

// Value of the cochain on a basis tuple (arbitrary order, signs applied).
std::vector<Rational> evaluate_cochain(const Cochain& c, const std::vector<std::size_t>& tuple);

struct CohomologyResult {
  int p = 0;
  std::size_t dim = 0;
  std::vector<Cochain> representatives;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
};

// Matrix of the Chevalley-Eilenberg differential d: C^p -> C^{p+1} for the
// convention d w(x_0..x_p) = sum_i (-1)^i x_i.w(..^x_i..)
//                          + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^x_i..^x_j..),
// whose p = 1 case is d f(x,y) = x.f(y) - y.f(x) - f([x,y]).
RatMatrix ce_differential(int p, const LieAlgebra& g, const LieModule& a);

CohomologyResult cohomology(int p, const LieAlgebra& g, const LieModule& a);

// Matrix of the degree-preserving action of e_r on C^p:
// (r.w)(x_1..x_p) = r.(w(x_1..x_p)) - sum_t w(x_1, .., [e_r, x_t], .., x_p).
RatMatrix cochain_action_matrix(int p, const LieAlgebra& g, const LieModule& a, std::size_t r);

// Cochains vanishing under insertion of any red element and invariant under
// the red action; this is the relative cochain space of the pair.
Subspace relative_subspace(int p, const LeviPair& pair, const LieModule& a);

CohomologyResult relative_cohomology(int p, const LeviPair& pair, const LieModule& a);

bool is_relative_cocycle(const Cochain& c, const LeviPair& pair, const LieModule& a);

struct InjectivityCheck {
  std::size_t z2_rel_dim = 0;
  std::size_t b2_rel_dim = 0;
  std::size_t rel_cap_abs_coboundaries_dim = 0;
  // One witness per basis cocycle of (relative Z^2) ∩ (absolute B^2): a
  // 1-cochain vanishing on red whose differential is that cocycle.
  std::vector<Cochain> witnesses;
};

// Verifies dim(Z^2_rel ∩ B^2_abs) = dim B^2_rel and round-trips a witness for
// every basis element; throws Error(InjectivityFailure) with a counterexample
// when the restriction map fails to be injective (invalid input or bug).
InjectivityCheck restriction_injectivity_check(const LeviPair& pair, const LieModule& a);

// For a relative 2-cocycle that is an absolute coboundary, produces f in C^1
// with d f = omega, f = 0 on red, and f red-invariant. Construction: solve
// d h = omega inside the red-invariant 1-cochains, then correct h on the
// center of red by a 1-cochain vanishing on [g,g].
Cochain relative_coboundary_witness(const Cochain& omega, const LeviPair& pair,
                                    const LieModule& a);

// Idempotent projecting onto the invariants of the red action along the moved
// subspace; commutes with the action.
RatMatrix reynolds_projection(const LieModule& m, const LeviPair& red);

}  // namespace algext
