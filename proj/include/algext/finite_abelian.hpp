#pragma once

#include <vector>

#include "algext/rational.hpp"

namespace algext {

// Finite abelian group in invariant-factor form: factors d1 | d2 | ... with
// every di >= 2; the empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  // Validates the divisibility chain; throws Error(ValidationError) otherwise.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Int> factors);

  // Normalizes an arbitrary list of cyclic orders (each >= 1) into invariant
  // factors via the Smith normal form of the diagonal presentation.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  Int order() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Int> factors_;
};

}  // namespace algext
