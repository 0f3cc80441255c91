#pragma once

#include <cstddef>
#include <vector>

#include "algext/errors.hpp"
#include "algext/rational.hpp"

namespace algext {

// Dense row-major matrix over an exact scalar.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b.at(k, j);
          if (bkj == 0) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::ShapeMismatch, "matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> e_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

}  // namespace algext
