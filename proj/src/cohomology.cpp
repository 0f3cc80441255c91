#include "algext/cohomology.hpp"

#include <bit>

namespace algext {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t(1) << i; }

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

void gen_tuples(std::size_t n, int p, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if ((int)cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    gen_tuples(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

void check_module_over(const LieAlgebra& g, const LieModule& a) {
  if (!(a.algebra == g))
    throw Error(ErrorKind::ShapeMismatch, "module is not defined over the given algebra");
}

// Projector with the given image and kernel (must be complementary).
RatMatrix projector_onto(const Subspace& onto, const Subspace& along) {
  const std::size_t n = onto.ambient_dim();
  if (onto.dim() + along.dim() != n)
    throw Error(ErrorKind::DecompositionFailure, "projector pieces are not complementary");
  RatMatrix b(n, n);
  for (std::size_t k = 0; k < onto.dim(); ++k)
    for (std::size_t r = 0; r < n; ++r) b.at(r, k) = onto.basis().at(k, r);
  for (std::size_t k = 0; k < along.dim(); ++k)
    for (std::size_t r = 0; r < n; ++r) b.at(r, onto.dim() + k) = along.basis().at(k, r);
  RatMatrix binv = inverse(b);
  RatMatrix diag(n, n);
  for (std::size_t k = 0; k < onto.dim(); ++k) diag.at(k, k) = 1;
  return b * diag * binv;
}

}  // namespace

TupleIndex::TupleIndex(std::size_t n, int p) {
  if (n > 64) throw Error(ErrorKind::ShapeMismatch, "algebra dimension above 64 unsupported");
  if (p >= 0 && p <= (int)n) {
    std::vector<std::size_t> cur;
    gen_tuples(n, p, 0, cur, tuples_);
  }
  for (std::size_t r = 0; r < tuples_.size(); ++r) rank_[mask_of(tuples_[r])] = r;
}

std::uint64_t TupleIndex::mask_of(const std::vector<std::size_t>& tuple) {
  std::uint64_t m = 0;
  for (auto i : tuple) m |= bit(i);
  return m;
}

std::size_t TupleIndex::rank(std::uint64_t mask) const {
  auto it = rank_.find(mask);
  if (it == rank_.end())
    throw Error(ErrorKind::ShapeMismatch, "tuple mask not in index");
  return it->second;
}

Cochain zero_cochain(int p, std::size_t g_dim, std::size_t a_dim) {
  TupleIndex idx(g_dim, p);
  return Cochain{p, g_dim, a_dim, std::vector<Rational>(idx.count() * a_dim)};
}

std::vector<Rational> evaluate_cochain(const Cochain& c, const std::vector<std::size_t>& tuple) {
  if ((int)tuple.size() != c.p)
    throw Error(ErrorKind::ShapeMismatch, "tuple length does not match cochain degree");
  // sort with sign; repeated index kills the value
  std::vector<std::size_t> t = tuple;
  int sign = 1;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return std::vector<Rational>(c.a_dim);
  TupleIndex idx(c.g_dim, c.p);
  std::size_t r = idx.rank(TupleIndex::mask_of(t));
  std::vector<Rational> out(c.a_dim);
  for (std::size_t s = 0; s < c.a_dim; ++s)
    out[s] = sign > 0 ? c.coords[r * c.a_dim + s] : Rational(-c.coords[r * c.a_dim + s]);
  return out;
}

RatMatrix ce_differential(int p, const LieAlgebra& g, const LieModule& a) {
  check_module_over(g, a);
  const std::size_t n = g.dim(), ad = a.dim;
  if (p < 0 || p > (int)n)
    throw Error(ErrorKind::DegreeOutOfRange, "degree must lie between 0 and dim g");
  TupleIndex dom(n, p), cod(n, p + 1);
  RatMatrix m(cod.count() * ad, dom.count() * ad);
  for (std::size_t jr = 0; jr < cod.count(); ++jr) {
    const auto& tup = cod.tuples()[jr];
    const std::uint64_t mask = TupleIndex::mask_of(tup);
    for (int i = 0; i <= p; ++i) {
      const std::size_t xi = tup[i];
      const int sgn = parity_sign(i);
      const std::size_t sub = dom.rank(mask ^ bit(xi));
      const RatMatrix& rho = a.action[xi];
      for (std::size_t t = 0; t < ad; ++t)
        for (std::size_t s = 0; s < ad; ++s)
          if (rho.at(t, s) != 0) m.at(jr * ad + t, sub * ad + s) += sgn * rho.at(t, s);
    }
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        const std::size_t xi = tup[i], xj = tup[j];
        const std::uint64_t base = mask ^ bit(xi) ^ bit(xj);
        const int sij = parity_sign(i + j);
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& ck = g.c(xi, xj, k);
          if (ck == 0) continue;
          if (base & bit(k)) continue;
          const int pos = std::popcount(base & (bit(k) - 1));
          const std::size_t rt = dom.rank(base | bit(k));
          Rational coef = ck * (sij * parity_sign(pos));
          for (std::size_t s = 0; s < ad; ++s) m.at(jr * ad + s, rt * ad + s) += coef;
        }
      }
  }
  return m;
}

CohomologyResult cohomology(int p, const LieAlgebra& g, const LieModule& a) {
  check_module_over(g, a);
  if (p < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const std::size_t n = g.dim();
  if (p > (int)n) return CohomologyResult{p, 0, {}, 0, 0};
  RatMatrix d = ce_differential(p, g, a);
  Subspace z = kernel(d);
  Subspace b = (p == 0) ? Subspace::zero(z.ambient_dim()) : image(ce_differential(p - 1, g, a));
  QuotientResult q = quotient_dim(z, b);
  CohomologyResult out{p, q.dim, {}, z.dim(), b.dim()};
  for (auto& v : q.representatives) out.representatives.push_back(Cochain{p, n, a.dim, std::move(v)});
  return out;
}

RatMatrix cochain_action_matrix(int p, const LieAlgebra& g, const LieModule& a, std::size_t r) {
  check_module_over(g, a);
  const std::size_t n = g.dim(), ad = a.dim;
  TupleIndex idx(n, p);
  RatMatrix m(idx.count() * ad, idx.count() * ad);
  const RatMatrix& rho = a.action[r];
  for (std::size_t ir = 0; ir < idx.count(); ++ir) {
    const auto& tup = idx.tuples()[ir];
    const std::uint64_t mask = TupleIndex::mask_of(tup);
    for (std::size_t t = 0; t < ad; ++t)
      for (std::size_t s = 0; s < ad; ++s)
        if (rho.at(t, s) != 0) m.at(ir * ad + t, ir * ad + s) += rho.at(t, s);
    for (int tp = 0; tp < p; ++tp) {
      const std::size_t it = tup[tp];
      const std::uint64_t rest = mask ^ bit(it);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& ck = g.c(r, it, k);
        if (ck == 0) continue;
        if (rest & bit(k)) continue;
        const int pos2 = std::popcount(rest & (bit(k) - 1));
        const std::size_t r2 = idx.rank(rest | bit(k));
        // the value at this tuple reads the cochain at the tuple with the
        // bracketed slot replaced by e_k
        Rational coef = ck * parity_sign(tp + pos2);
        for (std::size_t s = 0; s < ad; ++s) m.at(ir * ad + s, r2 * ad + s) -= coef;
      }
    }
  }
  return m;
}

Subspace relative_subspace(int p, const LeviPair& pair, const LieModule& a) {
  check_module_over(pair.g, a);
  if (p < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const std::size_t n = pair.g.dim(), ad = a.dim;
  if (p > (int)n) return Subspace::zero(0);
  TupleIndex idx(n, p);
  const std::size_t dim_c = idx.count() * ad;

  std::uint64_t red_mask = 0;
  for (auto r : pair.red_indices) red_mask |= bit(r);

  std::vector<std::size_t> bad_tuples;
  for (std::size_t ir = 0; ir < idx.count(); ++ir)
    if (TupleIndex::mask_of(idx.tuples()[ir]) & red_mask) bad_tuples.push_back(ir);

  RatMatrix constraints(bad_tuples.size() * ad + pair.red_indices.size() * dim_c, dim_c);
  std::size_t row = 0;
  for (auto ir : bad_tuples)
    for (std::size_t s = 0; s < ad; ++s) constraints.at(row++, ir * ad + s) = 1;
  for (auto r : pair.red_indices) {
    RatMatrix l = cochain_action_matrix(p, pair.g, a, r);
    for (std::size_t i = 0; i < dim_c; ++i, ++row)
      for (std::size_t j = 0; j < dim_c; ++j) constraints.at(row, j) = l.at(i, j);
  }
  return kernel(constraints);
}

CohomologyResult relative_cohomology(int p, const LeviPair& pair, const LieModule& a) {
  check_module_over(pair.g, a);
  if (p < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  const std::size_t n = pair.g.dim(), ad = a.dim;
  if (p > (int)n) return CohomologyResult{p, 0, {}, 0, 0};

  Subspace vp = relative_subspace(p, pair, a);
  RatMatrix d = ce_differential(p, pair.g, a);

  // The differential must map the relative subspace into the relative
  // subspace in the next degree.
  if (p + 1 <= (int)n) {
    Subspace vnext = relative_subspace(p + 1, pair, a);
    for (std::size_t i = 0; i < vp.dim(); ++i)
      if (!vnext.contains(d.apply(vp.basis_vector(i))))
        throw Error(ErrorKind::SubcomplexViolation,
                    "differential leaves the relative subspace (invalid input)");
  }

  Subspace z_rel = vp.intersect(kernel(d));
  Subspace b_rel = Subspace::zero(z_rel.ambient_dim());
  if (p >= 1) {
    Subspace vprev = relative_subspace(p - 1, pair, a);
    RatMatrix dprev = ce_differential(p - 1, pair.g, a);
    std::vector<std::vector<Rational>> gens;
    for (std::size_t i = 0; i < vprev.dim(); ++i) gens.push_back(dprev.apply(vprev.basis_vector(i)));
    b_rel = Subspace::span(z_rel.ambient_dim(), gens);
  }
  QuotientResult q = quotient_dim(z_rel, b_rel);
  CohomologyResult out{p, q.dim, {}, z_rel.dim(), b_rel.dim()};
  for (auto& v : q.representatives) out.representatives.push_back(Cochain{p, n, ad, std::move(v)});
  return out;
}

bool is_relative_cocycle(const Cochain& c, const LeviPair& pair, const LieModule& a) {
  if (c.g_dim != pair.g.dim() || c.a_dim != a.dim) return false;
  Subspace v = relative_subspace(c.p, pair, a);
  if (!v.contains(c.coords)) return false;
  RatMatrix d = ce_differential(c.p, pair.g, a);
  for (const auto& x : d.apply(c.coords))
    if (x != 0) return false;
  return true;
}

InjectivityCheck restriction_injectivity_check(const LeviPair& pair, const LieModule& a) {
  check_module_over(pair.g, a);
  const std::size_t n = pair.g.dim();
  InjectivityCheck out;
  if (n < 2) return out;  // C^2 = 0, nothing to test

  Subspace v2 = relative_subspace(2, pair, a);
  RatMatrix d1 = ce_differential(1, pair.g, a);
  RatMatrix d2 = ce_differential(2, pair.g, a);
  Subspace z2_rel = v2.intersect(kernel(d2));
  Subspace b2_abs = image(d1);
  Subspace inter = z2_rel.intersect(b2_abs);

  Subspace v1 = relative_subspace(1, pair, a);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < v1.dim(); ++i) gens.push_back(d1.apply(v1.basis_vector(i)));
  Subspace b2_rel = Subspace::span(inter.ambient_dim(), gens);

  out.z2_rel_dim = z2_rel.dim();
  out.b2_rel_dim = b2_rel.dim();
  out.rel_cap_abs_coboundaries_dim = inter.dim();

  if (inter.dim() != b2_rel.dim()) {
    // a class killed by restriction: exhibit a representative
    QuotientResult q = quotient_dim(inter, b2_rel);
    throw Error(ErrorKind::InjectivityFailure,
                "relative class dies in absolute cohomology; counterexample cocycle has " +
                    std::to_string(q.representatives.size()) + " independent representative(s)");
  }

  for (std::size_t i = 0; i < inter.dim(); ++i) {
    Cochain omega{2, n, a.dim, inter.basis_vector(i)};
    Cochain f = relative_coboundary_witness(omega, pair, a);
    auto df = d1.apply(f.coords);
    if (df != omega.coords)
      throw Error(ErrorKind::InjectivityFailure, "witness round-trip failed (internal)");
    out.witnesses.push_back(std::move(f));
  }
  return out;
}

Cochain relative_coboundary_witness(const Cochain& omega, const LeviPair& pair,
                                    const LieModule& a) {
  check_module_over(pair.g, a);
  const std::size_t n = pair.g.dim(), ad = a.dim;
  if (omega.p != 2 || omega.g_dim != n || omega.a_dim != ad)
    throw Error(ErrorKind::ShapeMismatch, "expected a 2-cochain over the pair");
  const std::size_t dim_c1 = n * ad;
  if (n < 2) return Cochain{1, n, ad, std::vector<Rational>(dim_c1)};

  Subspace v2 = relative_subspace(2, pair, a);
  if (!v2.contains(omega.coords))
    throw Error(ErrorKind::NotRelative, "cochain is not in the relative subspace");

  RatMatrix d1 = ce_differential(1, pair.g, a);
  auto h0 = solve(d1, omega.coords);
  if (!h0) throw Error(ErrorKind::NotACoboundary, "cochain is not an absolute coboundary");

  // invariant solution: project onto the red-invariants of C^1
  std::vector<RatMatrix> acts;
  for (auto r : pair.red_indices) acts.push_back(cochain_action_matrix(1, pair.g, a, r));
  InvariantSplit split = invariant_split(acts, dim_c1);
  RatMatrix proj = projector_onto(split.invariants, split.moved);
  std::vector<Rational> h = proj.apply(*h0);
  if (d1.apply(h) != omega.coords)
    throw Error(ErrorKind::DecompositionFailure,
                "invariant projection did not preserve the solution (action not reductive?)");

  // correct h on the center of red by a cochain vanishing on [g,g]
  LieAlgebra red_alg = restrict_to_indices(pair.g, pair.red_indices);
  Subspace z_red = center(red_alg);
  std::vector<std::vector<Rational>> z_vectors;
  for (std::size_t i = 0; i < z_red.dim(); ++i) {
    std::vector<Rational> v(n);
    auto zv = z_red.basis_vector(i);
    for (std::size_t k = 0; k < pair.red_indices.size(); ++k)
      if (zv[k] != 0) v[pair.red_indices[k]] = zv[k];
    z_vectors.push_back(std::move(v));
  }
  Subspace der = derived_subalgebra(pair.g);

  RowReducer basis_builder(n);
  std::vector<std::vector<Rational>> columns;
  for (const auto& zv : z_vectors) {
    if (!basis_builder.insert(zv))
      throw Error(ErrorKind::DecompositionFailure, "center of red meets [g,g]");
    columns.push_back(zv);
  }
  for (std::size_t i = 0; i < der.dim(); ++i) {
    auto v = der.basis_vector(i);
    if (!basis_builder.insert(v))
      throw Error(ErrorKind::DecompositionFailure, "center of red meets [g,g]");
    columns.push_back(v);
  }
  for (std::size_t i = 0; i < n && columns.size() < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    if (basis_builder.insert(e)) columns.push_back(e);
  }

  RatMatrix bmat(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r2 = 0; r2 < n; ++r2) bmat.at(r2, c) = columns[c][r2];
  RatMatrix hmat(ad, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < ad; ++s) hmat.at(s, i) = h[i * ad + s];
  RatMatrix w(ad, n);
  for (std::size_t c = 0; c < z_vectors.size(); ++c) {
    auto val = hmat.apply(z_vectors[c]);
    for (std::size_t s = 0; s < ad; ++s) w.at(s, c) = val[s];
  }
  RatMatrix f = w * inverse(bmat);

  Cochain out{1, n, ad, std::move(h)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < ad; ++s) out.coords[i * ad + s] -= f.at(s, i);

  if (d1.apply(out.coords) != omega.coords)
    throw Error(ErrorKind::DecompositionFailure, "witness construction failed (invalid input?)");
  for (auto r : pair.red_indices)
    for (std::size_t s = 0; s < ad; ++s)
      if (out.coords[r * ad + s] != 0)
        throw Error(ErrorKind::DecompositionFailure, "witness does not vanish on red");
  for (std::size_t i = 0; i < pair.red_indices.size(); ++i)
    for (const auto& x : acts[i].apply(out.coords))
      if (x != 0)
        throw Error(ErrorKind::DecompositionFailure, "witness is not red-invariant");
  return out;
}

RatMatrix reynolds_projection(const LieModule& m, const LeviPair& red) {
  InvariantSplit split = invariant_projection(m, red);
  return projector_onto(split.invariants, split.moved);
}

}  // namespace algext
