#include "algext/extension.hpp"

#include "algext/smith.hpp"

namespace algext {

LieAlgebra extension_structure(const Cochain& omega, const LieAlgebra& g, const LieModule& a) {
  if (!(a.algebra == g))
    throw Error(ErrorKind::ShapeMismatch, "module is not defined over the given algebra");
  const std::size_t n = g.dim(), ad = a.dim;
  if (omega.p != 2 || omega.g_dim != n || omega.a_dim != ad)
    throw Error(ErrorKind::ShapeMismatch, "expected a 2-cochain over (g, a)");
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < ad; ++s) labels.push_back("a" + std::to_string(s));
  for (const auto& l : g.labels()) labels.push_back(l);

  LieAlgebra total(ad + n, labels);
  TupleIndex pairs(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    // [x_i, a_t] = x_i . a_t
    for (std::size_t t = 0; t < ad; ++t) {
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t s = 0; s < ad; ++s)
        if (a.action[i].at(s, t) != 0) coeffs.push_back({s, a.action[i].at(s, t)});
      total.set_bracket(ad + i, t, coeffs);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      const std::size_t r = pairs.rank((std::uint64_t(1) << i) | (std::uint64_t(1) << j));
      for (std::size_t s = 0; s < ad; ++s)
        if (omega.coords[r * ad + s] != 0) coeffs.push_back({s, omega.coords[r * ad + s]});
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != 0) coeffs.push_back({ad + k, g.c(i, j, k)});
      total.set_bracket(ad + i, ad + j, coeffs);
    }
  }
  return total;
}

ExtensionAlgebra extension_algebra_from_cocycle(const Cochain& omega, const LieAlgebra& g,
                                                const LieModule& a) {
  RatMatrix d2 = ce_differential(2, g, a);
  for (const auto& x : d2.apply(omega.coords))
    if (x != 0) throw Error(ErrorKind::NotACocycle, "d omega != 0, bracket would violate Jacobi");
  ExtensionAlgebra out;
  out.total = extension_structure(omega, g, a);
  for (std::size_t s = 0; s < a.dim; ++s) out.a_indices.push_back(s);
  for (std::size_t i = 0; i < g.dim(); ++i) out.g_indices.push_back(a.dim + i);
  validate_lie(out.total).require();
  return out;
}

Cochain baer_sum(const Cochain& c1, const Cochain& c2) {
  if (c1.p != c2.p || c1.g_dim != c2.g_dim || c1.a_dim != c2.a_dim ||
      c1.coords.size() != c2.coords.size())
    throw Error(ErrorKind::ShapeMismatch, "cochain shapes differ");
  Cochain out = c1;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += c2.coords[k];
  return out;
}

Cochain pushforward_cocycle(const RatMatrix& gamma, const Cochain& c, const LieModule& a1,
                            const LieModule& a2) {
  if (!(a1.algebra == a2.algebra))
    throw Error(ErrorKind::ShapeMismatch, "coefficient modules live over different algebras");
  if (gamma.rows() != a2.dim || gamma.cols() != a1.dim)
    throw Error(ErrorKind::ShapeMismatch, "gamma shape does not match the coefficient modules");
  if (c.a_dim != a1.dim || c.g_dim != a1.algebra.dim())
    throw Error(ErrorKind::ShapeMismatch, "cochain does not match the source module");
  for (std::size_t i = 0; i < a1.algebra.dim(); ++i)
    if (!(gamma * a1.action[i] == a2.action[i] * gamma))
      throw Error(ErrorKind::NotEquivariant, "gamma does not intertwine the actions");

  const std::size_t tuples = c.a_dim == 0 ? 0 : c.coords.size() / c.a_dim;
  Cochain out{c.p, c.g_dim, a2.dim, std::vector<Rational>(tuples * a2.dim)};
  if (c.a_dim == 0) {
    TupleIndex idx(c.g_dim, c.p);
    out.coords.assign(idx.count() * a2.dim, Rational(0));
    return out;
  }
  for (std::size_t r = 0; r < tuples; ++r)
    for (std::size_t s = 0; s < a2.dim; ++s) {
      Rational acc = 0;
      for (std::size_t t = 0; t < a1.dim; ++t)
        if (gamma.at(s, t) != 0) acc += gamma.at(s, t) * c.coords[r * a1.dim + t];
      out.coords[r * a2.dim + s] = acc;
    }
  return out;
}

FiniteAbelianGroup hom_finite_part(const FiniteAbelianGroup& pi1, const CoeffGroupData& coeff) {
  if (pi1.is_trivial() || coeff.torus_dim == 0) return FiniteAbelianGroup::trivial();
  std::vector<Int> orders;
  for (const auto& d : pi1.invariant_factors())
    for (std::size_t t = 0; t < coeff.torus_dim; ++t) orders.push_back(d);
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

ExtResult ext_alg(const AlgGroupData& group, const CoeffGroupData& coeff) {
  validate_group_data(group).require();
  if (!(coeff.au_module.algebra == group.levi.g))
    throw Error(ErrorKind::ShapeMismatch,
                "coefficient module is not defined over the group's algebra");
  validate_module(coeff.au_module).require();
  // the unipotent radical must act nilpotently on a_u
  for (auto j : group.levi.u_indices) {
    RatMatrix pw = RatMatrix::identity(coeff.au_module.dim);
    for (std::size_t k = 0; k < coeff.au_module.dim; ++k) pw = pw * coeff.au_module.action[j];
    if (!pw.is_zero())
      throw Error(ErrorKind::NotNilpotent, "unipotent part acts non-nilpotently on a_u");
  }

  ExtResult out;
  out.finite_part = hom_finite_part(group.pi1_derived, coeff);
  CohomologyResult h2 = relative_cohomology(2, group.levi, coeff.au_module);
  out.vector_part_dim = h2.dim;
  out.vector_representatives = std::move(h2.representatives);
  return out;
}

ExtResult torus_torus_check(std::size_t g_torus_dim, std::size_t a_torus_dim) {
  LieAlgebra torus(g_torus_dim);
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < g_torus_dim; ++i) all.push_back(i);
  AlgGroupData group{{torus, all, {}}, FiniteAbelianGroup::trivial(), g_torus_dim};
  CoeffGroupData coeff{a_torus_dim, trivial_module(torus, 0)};
  ExtResult r = ext_alg(group, coeff);
  if (!r.finite_part.is_trivial() || r.vector_part_dim != 0)
    throw Error(ErrorKind::Mismatch, "torus-by-torus extensions must vanish");
  return r;
}

std::pair<LieModule, std::size_t> split_coefficients(const CoeffGroupData& coeff) {
  return {coeff.au_module, coeff.torus_dim};
}

}  // namespace algext
