#pragma once

#include <random>
#include <vector>

#include "algext/lie.hpp"

namespace algext::testing {

// sl2 in the basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
inline LieAlgebra make_sl2() {
  LieAlgebra g(3, {"e", "h", "f"});
  g.set_bracket(1, 0, {{0, 2}});
  g.set_bracket(1, 2, {{2, -2}});
  g.set_bracket(0, 2, {{1, 1}});
  return g;
}

// Heisenberg algebra h3: [x,y]=z.
inline LieAlgebra make_h3() {
  LieAlgebra g(3, {"x", "y", "z"});
  g.set_bracket(0, 1, {{2, 1}});
  return g;
}

inline LieAlgebra make_abelian(std::size_t n) { return LieAlgebra(n); }

// Borel of sl2: [h,e]=2e.
inline LieAlgebra make_borel() {
  LieAlgebra g(2, {"h", "e"});
  g.set_bracket(0, 1, {{1, 2}});
  return g;
}

// sl2 x V_std as a semidirect sum: basis (e, h, f, v1, v2), V abelian ideal.
// e.v2 = v1, f.v1 = v2, h.v1 = v1, h.v2 = -v2.
inline LieAlgebra make_sl2semi() {
  LieAlgebra g(5, {"e", "h", "f", "v1", "v2"});
  g.set_bracket(1, 0, {{0, 2}});
  g.set_bracket(1, 2, {{2, -2}});
  g.set_bracket(0, 2, {{1, 1}});
  g.set_bracket(0, 4, {{3, 1}});
  g.set_bracket(2, 3, {{4, 1}});
  g.set_bracket(1, 3, {{3, 1}});
  g.set_bracket(1, 4, {{4, -1}});
  return g;
}

inline LeviPair make_sl2semi_pair() {
  return LeviPair{make_sl2semi(), {0, 1, 2}, {3, 4}};
}

// Standard 2-dim sl2-module over the (e, h, f) basis.
inline LieModule make_vstd(const LieAlgebra& sl2) {
  LieModule m;
  m.algebra = sl2;
  m.dim = 2;
  RatMatrix re(2, 2), rh(2, 2), rf(2, 2);
  re.at(0, 1) = 1;
  rh.at(0, 0) = 1;
  rh.at(1, 1) = -1;
  rf.at(1, 0) = 1;
  m.action = {re, rh, rf};
  return m;
}

// Irreducible sl2-module of highest weight n (dimension n+1), basis of weight
// vectors w_0 (highest) .. w_n: h.w_k = (n-2k) w_k, f.w_k = w_{k+1},
// e.w_k = k(n-k+1) w_{k-1}.
inline LieModule sl2_irrep(const LieAlgebra& sl2, int n) {
  LieModule m;
  m.algebra = sl2;
  m.dim = static_cast<std::size_t>(n) + 1;
  RatMatrix re(m.dim, m.dim), rh(m.dim, m.dim), rf(m.dim, m.dim);
  for (int k = 0; k <= n; ++k) {
    rh.at(k, k) = n - 2 * k;
    if (k + 1 <= n) rf.at(k + 1, k) = 1;
    if (k >= 1) re.at(k - 1, k) = k * (n - k + 1);
  }
  m.action = {re, rh, rf};
  return m;
}

// Random change of basis with determinant +-1 keeps everything exact.
inline RatMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> val(-2, 2);
  RatMatrix m = RatMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    int f = val(rng);
    if (f == 0 && coin(rng) == 0) continue;
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) += f * m.at(j, k);
  }
  return m;
}

// Conjugates the structure constants by an invertible matrix; Jacobi is
// preserved, so this generates a family of valid algebras from one seed.
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p) {
  const std::size_t n = g.dim();
  RatMatrix pinv = inverse(p);
  LieAlgebra out(n);
  // new basis f_i = sum_k p[k][i] e_k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = g.bracket(p.col(i), p.col(j));
      auto coords = pinv.apply(w);
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t k = 0; k < n; ++k)
        if (coords[k] != 0) coeffs.push_back({k, coords[k]});
      out.set_bracket(i, j, coeffs);
    }
  return out;
}

// Transports a module along an algebra basis change p (new algebra basis
// f_i = sum_k p[k][i] e_k) and a module basis change q.
inline LieModule change_module_basis(const LieModule& m, const LieAlgebra& new_alg,
                                     const RatMatrix& p, const RatMatrix& q) {
  LieModule out;
  out.algebra = new_alg;
  out.dim = m.dim;
  RatMatrix qinv = inverse(q);
  for (std::size_t i = 0; i < new_alg.dim(); ++i) {
    RatMatrix acc(m.dim, m.dim);
    for (std::size_t k = 0; k < m.action.size(); ++k)
      if (p.at(k, i) != 0) acc = acc + p.at(k, i) * m.action[k];
    out.action.push_back(qinv * acc * q);
  }
  return out;
}

}  // namespace algext::testing
