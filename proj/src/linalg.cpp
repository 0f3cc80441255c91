#include "algext/linalg.hpp"

#include <algorithm>

namespace algext {

RowReducer::RowReducer(std::size_t cols) : cols_(cols) {}

bool RowReducer::insert(std::vector<Rational> row) {
  if (row.size() != cols_)
    throw Error(ErrorKind::ShapeMismatch, "row length does not match reducer width");
  // eliminate against existing pivots
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = row[pivots_[k]];
    if (c == 0) continue;
    Rational f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[k][j] != 0) row[j] -= f * rows_[k][j];
    }
  }
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == cols_) return false;
  // normalize
  Rational inv = 1 / row[lead];
  for (std::size_t j = lead; j < cols_; ++j)
    if (row[j] != 0) row[j] *= inv;
  // back-eliminate the new pivot from kept rows
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k][lead];
    if (c == 0) continue;
    Rational f = c;
    for (std::size_t j = lead; j < cols_; ++j)
      if (row[j] != 0) rows_[k][j] -= f * row[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

void RowReducer::insert_sparse(const std::vector<std::pair<std::size_t, Rational>>& row) {
  std::vector<Rational> dense(cols_);
  for (const auto& [j, v] : row) dense[j] = v;
  insert(std::move(dense));
}

RatMatrix RowReducer::basis() const {
  RatMatrix b(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) b.at(i, j) = rows_[i][j];
  return b;
}

RrefResult rref(const RatMatrix& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
  RrefResult out{RatMatrix(m.rows(), m.cols()), red.pivots()};
  RatMatrix b = red.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.r.at(i, j) = b.at(i, j);
  return out;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RatMatrix::identity(ambient);
  return s;
}

Subspace Subspace::span_rows(const RatMatrix& rows) {
  RowReducer red(rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i) red.insert(rows.row(i));
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = red.basis();
  return s;
}

Subspace Subspace::span_cols(const RatMatrix& cols) { return span_rows(cols.transpose()); }

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors) {
  RowReducer red(ambient);
  for (const auto& v : vectors) red.insert(v);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = red.basis();
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  return coordinates(v).has_value();
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
  if (v.size() != ambient_)
    throw Error(ErrorKind::ShapeMismatch, "vector does not match ambient dimension");
  // Pivot columns carry the coordinates: basis rows have unit pivot entries
  // and zeros in the other pivot columns.
  std::vector<Rational> coords(basis_.rows());
  std::vector<Rational> rem = v;
  std::size_t pivot_at = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (pivot_at < ambient_ && basis_.at(i, pivot_at) == 0) ++pivot_at;
    coords[i] = rem[pivot_at];
    if (coords[i] != 0)
      for (std::size_t j = pivot_at; j < ambient_; ++j)
        if (basis_.at(i, j) != 0) rem[j] -= coords[i] * basis_.at(i, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorKind::ShapeMismatch, "ambient dimension mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorKind::ShapeMismatch, "ambient dimension mismatch");
  RowReducer red(ambient_);
  for (std::size_t i = 0; i < basis_.rows(); ++i) red.insert(basis_.row(i));
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) red.insert(other.basis_.row(i));
  Subspace s;
  s.ambient_ = ambient_;
  s.basis_ = red.basis();
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorKind::ShapeMismatch, "ambient dimension mismatch");
  const std::size_t du = dim(), dw = other.dim();
  if (du == 0 || dw == 0) return Subspace::zero(ambient_);
  // x in both subspaces: x = sum a_i u_i = sum b_j w_j; solve for (a, b).
  RatMatrix m(ambient_, du + dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, i) = basis_.at(i, r);
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, du + j) = -other.basis_.at(j, r);
  Subspace coeff = kernel(m);
  std::vector<std::vector<Rational>> vecs;
  for (std::size_t k = 0; k < coeff.dim(); ++k) {
    auto c = coeff.basis_vector(k);
    std::vector<Rational> v(ambient_);
    for (std::size_t i = 0; i < du; ++i)
      if (c[i] != 0)
        for (std::size_t r = 0; r < ambient_; ++r) v[r] += c[i] * basis_.at(i, r);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(ambient_, vecs);
}

Subspace kernel(const RatMatrix& m) {
  RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  const auto& piv = rr.pivots;
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rational>> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -rr.r.at(k, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

Subspace image(const RatMatrix& m) { return Subspace::span_rows(m.transpose()); }

QuotientResult quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::ShapeMismatch, "ambient dimension mismatch");
  if (!z.contains(b))
    throw Error(ErrorKind::ContainmentViolation, "subspace b is not contained in z");
  QuotientResult out;
  out.dim = z.dim() - b.dim();
  RowReducer red(z.ambient_dim());
  for (std::size_t i = 0; i < b.dim(); ++i) red.insert(b.basis_vector(i));
  for (std::size_t i = 0; i < z.dim(); ++i) {
    auto v = z.basis_vector(i);
    if (red.insert(v)) out.representatives.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows())
    throw Error(ErrorKind::ShapeMismatch, "rhs length does not match row count");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult rr = rref(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == m.cols()) return std::nullopt;  // inconsistent
    x[rr.pivots[k]] = rr.r.at(k, m.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::DecompositionFailure, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::size_t rank(const RatMatrix& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.insert(m.row(i));
  return red.rank();
}

Subspace kernel_of_sparse_rows(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows,
                               std::size_t cols) {
  if (rows.size() > 2 * cols && cols > 0) {
    // ker A = ker (A^t A): x^t A^t A x = |Ax|^2 over Q.
    RatMatrix gram(cols, cols);
    for (const auto& r : rows)
      for (const auto& [i, vi] : r)
        for (const auto& [j, vj] : r) gram.at(i, j) += vi * vj;
    return kernel(gram);
  }
  RatMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) a.at(i, j) = v;
  return kernel(a);
}

}  // namespace algext
