#pragma once

#include "algext/matrix.hpp"

namespace algext {

struct SmithResult {
  // Diagonal of u*m*v, length min(rows, cols); d[i] >= 0 and d[i] | d[i+1].
  std::vector<Int> factors;
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
};

SmithResult smith_normal_form(const IntMatrix& m);

// Exact integer determinant (fraction-free elimination).
Int determinant(const IntMatrix& m);

}  // namespace algext
