#include "algext/finite_abelian.hpp"

#include "algext/errors.hpp"
#include "algext/smith.hpp"

namespace algext {

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw Error(ErrorKind::ValidationError, "invariant factors must be >= 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw Error(ErrorKind::ValidationError, "invariant factors must form a divisibility chain");
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
  std::vector<Int> nontrivial;
  for (const auto& d : orders) {
    if (d < 1) throw Error(ErrorKind::ValidationError, "cyclic orders must be >= 1");
    if (d > 1) nontrivial.push_back(d);
  }
  if (nontrivial.empty()) return trivial();
  IntMatrix m(nontrivial.size(), nontrivial.size());
  for (std::size_t i = 0; i < nontrivial.size(); ++i) m.at(i, i) = nontrivial[i];
  SmithResult s = smith_normal_form(m);
  FiniteAbelianGroup g;
  for (const auto& d : s.factors)
    if (d > 1) g.factors_.push_back(d);
  return g;
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

}  // namespace algext
