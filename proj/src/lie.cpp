#include "algext/lie.hpp"

#include <sstream>

#include "algext/smith.hpp"

namespace algext {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim_)
    throw Error(ErrorKind::ShapeMismatch, "label count does not match dimension");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j,
                             const std::vector<std::pair<std::size_t, Rational>>& coeffs) {
  for (const auto& [k, v] : coeffs) {
    c_[(i * dim_ + j) * dim_ + k] = v;
    c_[(j * dim_ + i) * dim_ + k] = -v;
  }
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  std::vector<Rational> out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorKind::ShapeMismatch, "bracket operand dimension mismatch");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << error_kind_name(issues[i].kind) << ": " << issues[i].detail;
  }
  return os.str();
}

void ValidationReport::require() const {
  if (!ok()) throw Error(issues.front().kind, summary());
}

ValidationReport validate_lie(const LieAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k)) {
          std::ostringstream os;
          os << "c(" << i << "," << j << "," << k << ") != -c(" << j << "," << i << "," << k << ")";
          rep.issues.push_back({ErrorKind::AntisymmetryViolation, os.str()});
        }
  if (!rep.ok()) return rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Rational> acc(n);
        auto add = [&](std::size_t a, std::size_t b, std::size_t c3) {
          // [[e_a, e_b], e_c]
          for (std::size_t m = 0; m < n; ++m) {
            if (g.c(a, b, m) == 0) continue;
            for (std::size_t l = 0; l < n; ++l)
              if (g.c(m, c3, l) != 0) acc[l] += g.c(a, b, m) * g.c(m, c3, l);
          }
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (std::size_t l = 0; l < n; ++l)
          if (acc[l] != 0) {
            std::ostringstream os;
            os << "Jacobi fails on basis triple (" << i << "," << j << "," << k << ")";
            rep.issues.push_back({ErrorKind::JacobiViolation, os.str()});
            break;
          }
      }
  return rep;
}

ValidationReport validate_module(const LieModule& m) {
  ValidationReport rep;
  const std::size_t n = m.algebra.dim();
  if (m.action.size() != n) {
    rep.issues.push_back({ErrorKind::ShapeMismatch, "one action matrix per basis element required"});
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "action matrix shape mismatch"});
      return rep;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatMatrix lhs(m.dim, m.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (m.algebra.c(i, j, k) != 0) lhs = lhs + m.algebra.c(i, j, k) * m.action[k];
      RatMatrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "rho([e_" << i << ", e_" << j << "]) != [rho(e_" << i << "), rho(e_" << j << ")]";
        rep.issues.push_back({ErrorKind::ModuleAxiomViolation, os.str()});
      }
    }
  return rep;
}

LieModule trivial_module(const LieAlgebra& g, std::size_t dim) {
  LieModule m;
  m.algebra = g;
  m.dim = dim;
  m.action.assign(g.dim(), RatMatrix(dim, dim));
  return m;
}

LieModule adjoint_module(const LieAlgebra& g) {
  LieModule m;
  m.algebra = g;
  m.dim = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i) m.action.push_back(g.ad(i));
  return m;
}

LieModule direct_sum(const LieModule& a, const LieModule& b) {
  if (!(a.algebra == b.algebra))
    throw Error(ErrorKind::ShapeMismatch, "direct sum over different algebras");
  LieModule m;
  m.algebra = a.algebra;
  m.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.algebra.dim(); ++i) {
    RatMatrix blk(m.dim, m.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < a.dim; ++c) blk.at(r, c) = a.action[i].at(r, c);
    for (std::size_t r = 0; r < b.dim; ++r)
      for (std::size_t c = 0; c < b.dim; ++c) blk.at(a.dim + r, a.dim + c) = b.action[i].at(r, c);
    m.action.push_back(std::move(blk));
  }
  return m;
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<std::vector<Rational>> vecs;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) vecs.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), vecs);
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // x central iff ad-action of every basis vector kills it: rows (j,k).
  RatMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m.at(j * n + k, i) = g.c(i, j, k);
  return kernel(m);
}

bool is_nilpotent(const LieAlgebra& g) {
  Subspace term = Subspace::full(g.dim());
  while (term.dim() > 0) {
    // next term: [g, term]
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      std::vector<Rational> ei(g.dim());
      ei[i] = 1;
      for (std::size_t b = 0; b < term.dim(); ++b)
        vecs.push_back(g.bracket(ei, term.basis_vector(b)));
    }
    Subspace next = Subspace::span(g.dim(), vecs);
    if (next.dim() == term.dim()) return false;  // series stabilized above zero
    term = next;
  }
  return true;
}

RatMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  RatMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tr += ads[i].at(a, b) * ads[j].at(b, a);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

LieAlgebra restrict_to_indices(const LieAlgebra& g, const std::vector<std::size_t>& indices) {
  const std::size_t m = indices.size();
  std::vector<std::size_t> pos(g.dim(), g.dim());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    pos[indices[a]] = a;
    labels.push_back(g.labels()[indices[a]]);
  }
  LieAlgebra sub(m, labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& v = g.c(indices[a], indices[b], k);
        if (v == 0) continue;
        if (pos[k] == g.dim())
          throw Error(ErrorKind::NotASubalgebra, "bracket leaves the spanned subspace");
        coeffs.push_back({pos[k], v});
      }
      sub.set_bracket(a, b, coeffs);
    }
  return sub;
}

LieAlgebra algebra_on_subspace(const LieAlgebra& g, const Subspace& s) {
  const std::size_t m = s.dim();
  LieAlgebra sub(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto w = g.bracket(s.basis_vector(a), s.basis_vector(b));
      auto coords = s.coordinates(w);
      if (!coords)
        throw Error(ErrorKind::NotASubalgebra, "bracket leaves the spanned subspace");
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t k = 0; k < m; ++k)
        if ((*coords)[k] != 0) coeffs.push_back({k, (*coords)[k]});
      sub.set_bracket(a, b, coeffs);
    }
  return sub;
}

ValidationReport validate_levi_pair(const LeviPair& p) {
  ValidationReport rep;
  const std::size_t n = p.g.dim();
  std::vector<int> seen(n, 0);
  for (auto i : p.red_indices) {
    if (i >= n) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "red index out of range"});
      return rep;
    }
    seen[i]++;
  }
  for (auto i : p.u_indices) {
    if (i >= n) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "u index out of range"});
      return rep;
    }
    seen[i]++;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != 1) {
      rep.issues.push_back(
          {ErrorKind::ShapeMismatch, "red and u indices must partition the basis"});
      return rep;
    }

  // u spans an ideal
  std::vector<bool> in_u(n, false);
  for (auto i : p.u_indices) in_u[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : p.u_indices)
      for (std::size_t k = 0; k < n; ++k)
        if (!in_u[k] && p.g.c(i, j, k) != 0) {
          rep.issues.push_back({ErrorKind::NotAnIdeal, "span(u) is not an ideal"});
          return rep;
        }

  LieAlgebra u_alg = restrict_to_indices(p.g, p.u_indices);
  if (!is_nilpotent(u_alg)) {
    rep.issues.push_back({ErrorKind::NotNilpotent, "span(u) is not nilpotent"});
    return rep;
  }

  LieAlgebra red_alg;
  try {
    red_alg = restrict_to_indices(p.g, p.red_indices);
  } catch (const Error&) {
    rep.issues.push_back({ErrorKind::NotASubalgebra, "span(red) is not a subalgebra"});
    return rep;
  }

  // reductive: center ⊕ derived, with nondegenerate Killing form on derived
  Subspace z = center(red_alg);
  Subspace der = derived_subalgebra(red_alg);
  if (z.intersect(der).dim() != 0 || z.dim() + der.dim() != red_alg.dim()) {
    rep.issues.push_back(
        {ErrorKind::NotReductive, "red does not split as center + derived subalgebra"});
    return rep;
  }
  if (der.dim() > 0) {
    LieAlgebra der_alg;
    try {
      der_alg = algebra_on_subspace(red_alg, der);
    } catch (const Error&) {
      rep.issues.push_back({ErrorKind::NotReductive, "derived part of red is not a subalgebra"});
      return rep;
    }
    if (rank(killing_form(der_alg)) != der_alg.dim()) {
      rep.issues.push_back(
          {ErrorKind::NotReductive, "Killing form degenerate on the derived part of red"});
      return rep;
    }
  }
  return rep;
}

InvariantSplit invariant_split(const std::vector<RatMatrix>& actions, std::size_t dim) {
  Subspace inv = Subspace::full(dim);
  Subspace moved = Subspace::zero(dim);
  for (const auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim)
      throw Error(ErrorKind::ShapeMismatch, "action matrix shape mismatch");
    inv = inv.intersect(kernel(a));
    moved = moved.sum(image(a));
  }
  if (inv.dim() + moved.dim() != dim || inv.intersect(moved).dim() != 0)
    throw Error(ErrorKind::DecompositionFailure,
                "invariants and moved subspace are not complementary (action not reductive?)");
  return {inv, moved};
}

InvariantSplit invariant_projection(const LieModule& m, const LeviPair& red) {
  std::vector<RatMatrix> acts;
  for (auto r : red.red_indices) acts.push_back(m.action[r]);
  return invariant_split(acts, m.dim);
}

ValidationReport validate_group_data(const AlgGroupData& g) {
  ValidationReport rep = validate_levi_pair(g.levi);
  if (!rep.ok()) return rep;
  for (const auto& d : g.pi1_derived.invariant_factors())
    if (d <= 0) {
      rep.issues.push_back({ErrorKind::ValidationError, "pi1 invariant factors must be positive"});
      return rep;
    }
  LieAlgebra red_alg = restrict_to_indices(g.levi.g, g.levi.red_indices);
  if (center(red_alg).dim() < g.center_torus_dim)
    rep.issues.push_back({ErrorKind::ValidationError,
                          "center_torus_dim exceeds the center of the reductive part"});
  return rep;
}

}  // namespace algext
