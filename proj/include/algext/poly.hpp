#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algext/errors.hpp"
#include "algext/rational.hpp"

namespace algext {

// Exponent vector with inline storage; polynomials here never need more than
// a few group-cochain slots worth of variables.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;

  Monomial() : nvars_(0), deg_(0) { e_.fill(0); }
  explicit Monomial(std::size_t nvars) : nvars_(nvars), deg_(0) {
    if (nvars > kMaxVars)
      throw Error(ErrorKind::ShapeMismatch, "too many polynomial variables (max 32)");
    e_.fill(0);
  }

  static Monomial var(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set_exp(i, e);
    return m;
  }

  std::size_t num_vars() const { return nvars_; }
  unsigned exp(std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }

  void set_exp(std::size_t i, unsigned e) {
    if (i >= nvars_) throw Error(ErrorKind::ShapeMismatch, "variable index out of range");
    if (e > 255) throw Error(ErrorKind::ShapeMismatch, "exponent overflow");
    deg_ += e - e_[i];
    e_[i] = static_cast<std::uint8_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = e_[i] + o.e_[i];
      if (e > 255) throw Error(ErrorKind::ShapeMismatch, "exponent overflow");
      m.e_[i] = static_cast<std::uint8_t>(e);
    }
    m.deg_ = deg_ + o.deg_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  // graded lexicographic: by total degree, then by exponents from the first
  // variable (higher exponent earlier means a larger monomial)
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (std::size_t i = 0; i < a.nvars_ || i < b.nvars_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
  }

 private:
  std::size_t nvars_;
  unsigned deg_;
  std::array<std::uint8_t, kMaxVars> e_;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t num_vars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;  // 0 for the zero polynomial
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o);

  MultiPoly pow(unsigned e) const;

  // Substitutes subs[i] for variable i; all subs share a common variable set.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;

  // Renames variable i to var_map[i] inside a (possibly larger) variable set.
  MultiPoly remap_vars(const std::vector<std::size_t>& var_map, std::size_t new_nvars) const;

  // Terms of total degree <= bound / == d.
  MultiPoly truncate_above(unsigned bound) const;
  MultiPoly homogeneous_part(unsigned d) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Parses +, -, *, ^, parentheses, integer and p/q literals over the named
// variables. Throws Error(ParseError) with a position on malformed input.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

std::string poly_string(const MultiPoly& p, const std::vector<std::string>& var_names);

// x1..xd (and y1..yd when doubled) — the variable names used by group laws.
std::vector<std::string> coordinate_names(std::size_t dim, bool doubled);

}  // namespace algext
