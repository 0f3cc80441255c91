#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "algext/matrix.hpp"

namespace algext {

struct RrefResult {
  RatMatrix r;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form and pivot columns. Row space is preserved and the
// result is canonical, so it doubles as the subspace equality normal form.
RrefResult rref(const RatMatrix& m);

// Streaming row-space reducer: rows are inserted one at a time and the kept
// rows are maintained in RREF. Insertion order does not change the final
// echelon (the RREF of a row space is unique).
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  // Reduces the row against the current basis; keeps it if independent.
  // Returns true when the row enlarged the row space.
  bool insert(std::vector<Rational> row);
  void insert_sparse(const std::vector<std::pair<std::size_t, Rational>>& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Rows in pivot order; this is the canonical RREF basis of the row space.
  RatMatrix basis() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // kept sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// A linear subspace of Q^ambient, stored as the canonical RREF basis of its
// row space; equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span_rows(const RatMatrix& rows);
  static Subspace span_cols(const RatMatrix& cols);
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  std::vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in the RREF basis, or nullopt when v is outside.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
};

Subspace kernel(const RatMatrix& m);
Subspace image(const RatMatrix& m);

struct QuotientResult {
  std::size_t dim;
  // Vectors of z projecting to a basis of z/b, drawn from z's canonical basis.
  std::vector<std::vector<Rational>> representatives;
};

// Throws Error(ContainmentViolation) unless b is contained in z.
QuotientResult quotient_dim(const Subspace& z, const Subspace& b);

// One solution of m x = rhs with all free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

// Throws Error(ShapeMismatch) for non-square, Error(ContainmentViolation)
// never; singular input throws Error(DecompositionFailure).
RatMatrix inverse(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Kernel of the matrix whose rows are the given sparse rows. When the row
// count is much larger than the column count this goes through the exact
// Gram matrix (ker A = ker AtA over Q).
Subspace kernel_of_sparse_rows(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rows,
                               std::size_t cols);

}  // namespace algext
