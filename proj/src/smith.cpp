#include "algext/smith.hpp"

#include <cstdlib>

namespace algext {

namespace {

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    // pick the absolutely smallest nonzero entry of the trailing block as pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        if (!found || int_abs(a.at(i, j)) < int_abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;  // trailing block is zero
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    swap_cols(a, t, pj);
    swap_cols(v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t by euclidean steps
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);  // truncating division
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
        }
        if (a.at(i, t) != 0) {  // remainder smaller than pivot; promote it
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      // clear row t
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
        }
        if (a.at(t, j) != 0) {
          swap_cols(a, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce that the pivot divides the whole trailing block
      for (std::size_t i = t + 1; i < r && clean; ++i)
        for (std::size_t j = t + 1; j < c && clean; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            clean = false;
          }
    }
    if (a.at(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }

  SmithResult out;
  out.factors.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.factors[t] = a.at(t, t);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace algext
