#pragma once

#include <map>
#include <utility>

#include "algext/cohomology.hpp"
#include "algext/poly.hpp"

namespace algext {

// Unipotent group presented as a polynomial law on affine d-space in
// coordinates where the identity is 0 and law(x,y) = x + y + higher order.
// Law variables: x1..xd then y1..yd; inverse variables: x1..xd.
struct PolyGroup {
  std::size_t dim = 0;
  std::vector<MultiPoly> law;
  std::vector<MultiPoly> inverse;
};

// Polynomial action of the group on a coefficient space: an a_dim x a_dim
// matrix of polynomials in the group coordinates, unipotent and
// multiplicative under the law.
struct PolyAction {
  std::size_t a_dim = 0;
  std::vector<std::vector<MultiPoly>> entries;

  static PolyAction trivial(std::size_t a_dim, std::size_t group_dim);
};

ValidationReport validate_poly_group(const PolyGroup& g);
ValidationReport validate_poly_action(const PolyGroup& g, const PolyAction& act);

// Bracket extracted from the mixed quadratic part of the law:
// c(i,j,k) = [x_i y_j](law_k) - [x_j y_i](law_k).
LieAlgebra lie_algebra_of(const PolyGroup& g);

// Linear part of the action matrix in each coordinate direction.
LieModule differentiate_action(const PolyGroup& g, const PolyAction& act);

// Group cochain: a_dim polynomials in n*dim variables (slot q of the n
// arguments owns variables [q*dim, (q+1)*dim)).
struct PolyCochain {
  int n = 0;
  std::size_t group_dim = 0;
  std::size_t a_dim = 0;
  std::vector<MultiPoly> components;
  unsigned max_degree = 0;
};

PolyCochain monomial_cochain(int n, std::size_t group_dim, std::size_t a_dim, const Monomial& m,
                             std::size_t component);

// Differential engine for one (group, action): carries memoized monomial
// compositions with the law, so spanning-set sweeps stay cheap. Not safe for
// concurrent use; build one engine per thread.
class GroupComplex {
 public:
  GroupComplex(PolyGroup g, PolyAction act);

  const PolyGroup& group() const { return group_; }
  const PolyAction& action() const { return action_; }

  // (delta f)(g_0..g_n) = g_0 . f(g_1..g_n) + (-1)^{n+1} f(g_0..g_{n-1})
  //                     + sum_i (-1)^{i+1} f(g_0, .., g_i g_{i+1}, .., g_n).
  PolyCochain differential(const PolyCochain& f);

 private:
  const std::vector<MultiPoly>& slot_substitution(int n, int slot);
  const MultiPoly& compose(const Monomial& m, int n, int slot);

  PolyGroup group_;
  PolyAction action_;
  std::map<std::pair<int, int>, std::vector<MultiPoly>> subs_;
  std::map<std::pair<int, int>, std::map<Monomial, MultiPoly>> memo_;
};

PolyCochain group_differential(const PolyCochain& f, const PolyGroup& g, const PolyAction& act);

struct DeltaSquaredReport {
  std::size_t checked = 0;
  bool ok = true;
  std::string detail;  // first violation, if any
};

// delta(delta f) = 0 for every monomial cochain of degree <= max_degree.
DeltaSquaredReport delta_squared_check(const PolyGroup& g, const PolyAction& act, int n,
                                       unsigned max_degree);

// All monomials in nvars variables of total degree <= bound, graded-lex
// ascending; the coordinate order of truncated cochain spaces.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound);

struct TruncatedCohomology {
  int p = 0;
  unsigned max_degree = 0;
  std::size_t h = 0;        // dim Z^p(D) - dim(B^p(D) ∩ Z^p(D))
  bool stabilized = false;  // h(D) = h(D-1) = h(D-2)
  std::vector<std::pair<unsigned, std::size_t>> history;  // (degree, h)
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::vector<PolyCochain> representatives;
};

TruncatedCohomology truncated_group_cohomology(const PolyGroup& g, const PolyAction& act, int p,
                                               unsigned max_degree, int jobs = 1);

// The bidegree-(1,1) part of a polynomial group 2-cocycle, antisymmetrized:
// a 2-cocycle for the extracted Lie algebra. Throws Error(NotACocycle) when
// the input is not a group cocycle.
Cochain differentiate_cocycle(const PolyCochain& f, const PolyGroup& g, const PolyAction& act);

struct VanEstReport {
  int p = 0;
  unsigned max_degree = 0;
  std::size_t group_h = 0;
  std::size_t lie_h = 0;
  bool stabilized = false;
  bool match = false;
  std::vector<std::pair<unsigned, std::size_t>> history;
};

// Compares the truncated polynomial-group cohomology with the Lie algebra
// cohomology of the extracted algebra (trivial Levi part: the group is
// unipotent).
VanEstReport vanest_compare(const PolyGroup& g, const PolyAction& act, int p,
                            unsigned max_degree, int jobs = 1);

// Throws Error(Mismatch) when the comparison stabilized and disagrees.
void require_match(const VanEstReport& report);

}  // namespace algext
