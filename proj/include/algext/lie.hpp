#pragma once

#include <string>
#include <vector>

#include "algext/finite_abelian.hpp"
#include "algext/linalg.hpp"
#include "algext/matrix.hpp"

namespace algext {

// Finite-dimensional Lie algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  // Sets [e_i, e_j] and its antisymmetric counterpart.
  void set_bracket(std::size_t i, std::size_t j,
                   const std::vector<std::pair<std::size_t, Rational>>& coeffs);

  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const;
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  // Matrix of ad(e_i): column j holds [e_i, e_j].
  RatMatrix ad(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

// Finite-dimensional module: one action matrix per basis element of the
// algebra, subject to rho([x,y]) = rho(x)rho(y) - rho(y)rho(x).
struct LieModule {
  LieAlgebra algebra;
  std::size_t dim = 0;
  std::vector<RatMatrix> action;  // algebra.dim() matrices, dim x dim
};

LieModule trivial_module(const LieAlgebra& g, std::size_t dim);
LieModule adjoint_module(const LieAlgebra& g);
LieModule direct_sum(const LieModule& a, const LieModule& b);

// A Lie algebra with designated reductive part (red) and complementary
// nilpotent ideal (u), both given as basis index sets.
struct LeviPair {
  LieAlgebra g;
  std::vector<std::size_t> red_indices;
  std::vector<std::size_t> u_indices;
};

struct ValidationIssue {
  ErrorKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
  // Throws Error carrying the first issue's kind when the report is bad.
  void require() const;
};

ValidationReport validate_lie(const LieAlgebra& g);
ValidationReport validate_module(const LieModule& m);
ValidationReport validate_levi_pair(const LeviPair& p);

Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
RatMatrix killing_form(const LieAlgebra& g);

// Structure constants of the span of a basis-index subset; throws
// Error(NotASubalgebra) when brackets leave the span.
LieAlgebra restrict_to_indices(const LieAlgebra& g, const std::vector<std::size_t>& indices);

// Structure constants in the canonical basis of an arbitrary subalgebra.
LieAlgebra algebra_on_subspace(const LieAlgebra& g, const Subspace& s);

struct InvariantSplit {
  Subspace invariants;
  Subspace moved;
};

// invariants = intersection of kernels, moved = sum of images, over the given
// action matrices; throws Error(DecompositionFailure) unless the two are
// complementary (which characterizes completely reducible actions here).
InvariantSplit invariant_split(const std::vector<RatMatrix>& actions, std::size_t dim);

InvariantSplit invariant_projection(const LieModule& m, const LeviPair& red);

// Group-level data consumed by the extension classifier: the Levi pair of g,
// the fundamental group of the derived Levi subgroup, and the dimension of
// the central torus.
struct AlgGroupData {
  LeviPair levi;
  FiniteAbelianGroup pi1_derived;
  std::size_t center_torus_dim = 0;
};

// Coefficient group A = (unipotent part given by a g-module) x (torus).
struct CoeffGroupData {
  std::size_t torus_dim = 0;
  LieModule au_module;
};

ValidationReport validate_group_data(const AlgGroupData& g);

}  // namespace algext
