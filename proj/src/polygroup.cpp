#include "algext/polygroup.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace algext {

namespace {

std::vector<MultiPoly> identity_subs(std::size_t nvars) {
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < nvars; ++i) subs.push_back(MultiPoly::variable(nvars, i));
  return subs;
}

void run_tasks(std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs && i < (int)tasks.size(); ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

PolyAction PolyAction::trivial(std::size_t a_dim, std::size_t group_dim) {
  PolyAction act;
  act.a_dim = a_dim;
  act.entries.assign(a_dim, std::vector<MultiPoly>(a_dim, MultiPoly(group_dim)));
  for (std::size_t s = 0; s < a_dim; ++s)
    act.entries[s][s] = MultiPoly::constant(group_dim, 1);
  return act;
}

ValidationReport validate_poly_group(const PolyGroup& g) {
  ValidationReport rep;
  const std::size_t d = g.dim;
  if (g.law.size() != d || g.inverse.size() != d) {
    rep.issues.push_back({ErrorKind::ShapeMismatch, "law/inverse must have one entry per coordinate"});
    return rep;
  }
  for (const auto& p : g.law)
    if (p.num_vars() != 2 * d) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "law entries must use 2*dim variables"});
      return rep;
    }
  for (const auto& p : g.inverse)
    if (p.num_vars() != d) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "inverse entries must use dim variables"});
      return rep;
    }

  // law(x, 0) = x and law(0, y) = y
  std::vector<MultiPoly> x_zero, zero_y;
  for (std::size_t k = 0; k < d; ++k) {
    x_zero.push_back(MultiPoly::variable(d, k));
    zero_y.push_back(MultiPoly(d));
  }
  for (std::size_t k = 0; k < d; ++k) {
    zero_y.push_back(MultiPoly::variable(d, k));
    x_zero.push_back(MultiPoly(d));
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (!(g.law[k].substitute(x_zero) == MultiPoly::variable(d, k))) {
      rep.issues.push_back({ErrorKind::NoIdentity, "law(x, 0) != x"});
      return rep;
    }
    if (!(g.law[k].substitute(zero_y) == MultiPoly::variable(d, k))) {
      rep.issues.push_back({ErrorKind::NoIdentity, "law(0, y) != y"});
      return rep;
    }
  }

  // unipotent normal form: law = x + y + higher order
  for (std::size_t k = 0; k < d; ++k) {
    MultiPoly lin = g.law[k].homogeneous_part(1);
    MultiPoly want = MultiPoly::variable(2 * d, k) + MultiPoly::variable(2 * d, d + k);
    if (!(lin == want) || g.law[k].constant_term() != 0) {
      rep.issues.push_back({ErrorKind::NotUnipotentForm, "law is not x + y + higher order"});
      return rep;
    }
  }

  // associativity over 3*dim variables
  {
    std::vector<MultiPoly> outer_left, outer_right;
    std::vector<std::size_t> xy_map(2 * d), yz_map(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
      xy_map[k] = k;
      xy_map[d + k] = d + k;
      yz_map[k] = d + k;
      yz_map[d + k] = 2 * d + k;
    }
    for (std::size_t k = 0; k < d; ++k) outer_left.push_back(g.law[k].remap_vars(xy_map, 3 * d));
    for (std::size_t k = 0; k < d; ++k)
      outer_left.push_back(MultiPoly::variable(3 * d, 2 * d + k));
    for (std::size_t k = 0; k < d; ++k) outer_right.push_back(MultiPoly::variable(3 * d, k));
    for (std::size_t k = 0; k < d; ++k) outer_right.push_back(g.law[k].remap_vars(yz_map, 3 * d));
    for (std::size_t k = 0; k < d; ++k)
      if (!(g.law[k].substitute(outer_left) == g.law[k].substitute(outer_right))) {
        rep.issues.push_back({ErrorKind::NotAssociative, "law(law(x,y),z) != law(x,law(y,z))"});
        return rep;
      }
  }

  // law(x, inverse(x)) = 0
  {
    std::vector<MultiPoly> subs = identity_subs(d);
    for (std::size_t k = 0; k < d; ++k) subs.push_back(g.inverse[k]);
    for (std::size_t k = 0; k < d; ++k)
      if (!g.law[k].substitute(subs).is_zero()) {
        rep.issues.push_back({ErrorKind::BadInverse, "law(x, inverse(x)) != 0"});
        return rep;
      }
  }
  return rep;
}

ValidationReport validate_poly_action(const PolyGroup& g, const PolyAction& act) {
  ValidationReport rep;
  const std::size_t d = g.dim, m = act.a_dim;
  if (act.entries.size() != m) {
    rep.issues.push_back({ErrorKind::ShapeMismatch, "action matrix shape mismatch"});
    return rep;
  }
  for (const auto& row : act.entries)
    if (row.size() != m) {
      rep.issues.push_back({ErrorKind::ShapeMismatch, "action matrix shape mismatch"});
      return rep;
    }

  // action(0) = identity
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      Rational c0 = act.entries[s][t].constant_term();
      if (c0 != (s == t ? Rational(1) : Rational(0))) {
        rep.issues.push_back({ErrorKind::ValidationError, "action at the identity is not trivial"});
        return rep;
      }
    }

  // multiplicativity: action(law(x,y)) = action(x) action(y)
  {
    std::vector<MultiPoly> law_subs;
    for (std::size_t k = 0; k < d; ++k) law_subs.push_back(g.law[k]);
    std::vector<std::size_t> xmap(d), ymap(d);
    for (std::size_t k = 0; k < d; ++k) {
      xmap[k] = k;
      ymap[k] = d + k;
    }
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        MultiPoly lhs = act.entries[s][t].substitute(law_subs);
        MultiPoly rhs(2 * d);
        for (std::size_t u = 0; u < m; ++u)
          rhs += act.entries[s][u].remap_vars(xmap, 2 * d) *
                 act.entries[u][t].remap_vars(ymap, 2 * d);
        if (!(lhs == rhs)) {
          rep.issues.push_back(
              {ErrorKind::ValidationError, "action is not multiplicative under the law"});
          return rep;
        }
      }
  }

  // unipotence: (action - 1)^a_dim = 0 as a polynomial matrix
  {
    std::vector<std::vector<MultiPoly>> nil = act.entries;
    for (std::size_t s = 0; s < m; ++s) nil[s][s] = nil[s][s] - MultiPoly::constant(d, 1);
    std::vector<std::vector<MultiPoly>> pw(m, std::vector<MultiPoly>(m, MultiPoly(d)));
    for (std::size_t s = 0; s < m; ++s) pw[s][s] = MultiPoly::constant(d, 1);
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<std::vector<MultiPoly>> nxt(m, std::vector<MultiPoly>(m, MultiPoly(d)));
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
          for (std::size_t u = 0; u < m; ++u) nxt[s][t] += pw[s][u] * nil[u][t];
      pw = nxt;
    }
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t)
        if (!pw[s][t].is_zero()) {
          rep.issues.push_back({ErrorKind::ValidationError, "action is not unipotent"});
          return rep;
        }
  }
  return rep;
}

LieAlgebra lie_algebra_of(const PolyGroup& g) {
  const std::size_t d = g.dim;
  LieAlgebra lie(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t k = 0; k < d; ++k) {
        Monomial xiyj(2 * d), xjyi(2 * d);
        xiyj.set_exp(i, 1);
        xiyj.set_exp(d + j, 1);
        xjyi.set_exp(j, 1);
        xjyi.set_exp(d + i, 1);
        Rational c = g.law[k].coeff(xiyj) - g.law[k].coeff(xjyi);
        if (c != 0) coeffs.push_back({k, c});
      }
      lie.set_bracket(i, j, coeffs);
    }
  validate_lie(lie).require();
  return lie;
}

LieModule differentiate_action(const PolyGroup& g, const PolyAction& act) {
  LieModule m;
  m.algebra = lie_algebra_of(g);
  m.dim = act.a_dim;
  for (std::size_t i = 0; i < g.dim; ++i) {
    RatMatrix rho(act.a_dim, act.a_dim);
    for (std::size_t s = 0; s < act.a_dim; ++s)
      for (std::size_t t = 0; t < act.a_dim; ++t)
        rho.at(s, t) = act.entries[s][t].coeff(Monomial::var(g.dim, i));
    m.action.push_back(std::move(rho));
  }
  validate_module(m).require();
  return m;
}

PolyCochain monomial_cochain(int n, std::size_t group_dim, std::size_t a_dim, const Monomial& m,
                             std::size_t component) {
  PolyCochain f;
  f.n = n;
  f.group_dim = group_dim;
  f.a_dim = a_dim;
  f.components.assign(a_dim, MultiPoly(n * group_dim));
  f.components[component].add_term(m, 1);
  f.max_degree = m.degree();
  return f;
}

GroupComplex::GroupComplex(PolyGroup g, PolyAction act)
    : group_(std::move(g)), action_(std::move(act)) {}

const std::vector<MultiPoly>& GroupComplex::slot_substitution(int n, int slot) {
  auto key = std::make_pair(n, slot);
  auto it = subs_.find(key);
  if (it != subs_.end()) return it->second;

  const std::size_t d = group_.dim;
  const std::size_t target = (n + 1) * d;
  std::vector<MultiPoly> subs;
  std::vector<std::size_t> law_map(2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    law_map[k] = slot * d + k;
    law_map[d + k] = (slot + 1) * d + k;
  }
  for (int q = 0; q < n; ++q)
    for (std::size_t k = 0; k < d; ++k) {
      if (q < slot)
        subs.push_back(MultiPoly::variable(target, q * d + k));
      else if (q == slot)
        subs.push_back(group_.law[k].remap_vars(law_map, target));
      else
        subs.push_back(MultiPoly::variable(target, (q + 1) * d + k));
    }
  return subs_.emplace(key, std::move(subs)).first->second;
}

const MultiPoly& GroupComplex::compose(const Monomial& m, int n, int slot) {
  auto key = std::make_pair(n, slot);
  auto& table = memo_[key];
  auto it = table.find(m);
  if (it != table.end()) return it->second;

  const std::size_t target = (n + 1) * group_.dim;
  MultiPoly value;
  if (m.degree() == 0) {
    value = MultiPoly::constant(target, 1);
  } else {
    std::size_t v = 0;
    while (m.exp(v) == 0) ++v;
    Monomial rest = m;
    rest.set_exp(v, m.exp(v) - 1);
    const MultiPoly& head = slot_substitution(n, slot)[v];
    value = compose(rest, n, slot) * head;
  }
  return table.emplace(m, std::move(value)).first->second;
}

PolyCochain GroupComplex::differential(const PolyCochain& f) {
  const std::size_t d = group_.dim, ad = action_.a_dim;
  if (f.group_dim != d || f.a_dim != ad)
    throw Error(ErrorKind::ShapeMismatch, "cochain does not match the group/action");
  const int n = f.n;
  const std::size_t target = (n + 1) * d;

  PolyCochain out;
  out.n = n + 1;
  out.group_dim = d;
  out.a_dim = ad;
  out.components.assign(ad, MultiPoly(target));

  // g_0 . f(g_1..g_n): shift the cochain one slot right, then act
  {
    std::vector<std::size_t> shift(n * d);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + d;
    std::vector<std::size_t> slot0(d);
    for (std::size_t k = 0; k < d; ++k) slot0[k] = k;
    std::vector<MultiPoly> shifted;
    for (std::size_t t = 0; t < ad; ++t) shifted.push_back(f.components[t].remap_vars(shift, target));
    for (std::size_t s = 0; s < ad; ++s)
      for (std::size_t t = 0; t < ad; ++t) {
        const MultiPoly& e = action_.entries[s][t];
        if (e.is_zero()) continue;
        if (e.total_degree() == 0)
          out.components[s] += e.constant_term() * shifted[t];
        else
          out.components[s] += e.remap_vars(slot0, target) * shifted[t];
      }
  }

  // (-1)^{n+1} f(g_0..g_{n-1})
  {
    std::vector<std::size_t> keep(n * d);
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    const Rational sgn = (n % 2 == 0) ? -1 : 1;
    for (std::size_t t = 0; t < ad; ++t)
      out.components[t] += sgn * f.components[t].remap_vars(keep, target);
  }

  // sum_i (-1)^{i+1} f(g_0, .., g_i g_{i+1}, .., g_n)
  for (int i = 0; i < n; ++i) {
    const Rational sgn = (i % 2 == 0) ? -1 : 1;
    for (std::size_t t = 0; t < ad; ++t) {
      MultiPoly acc(target);
      for (const auto& [m, c] : f.components[t].terms()) acc += c * compose(m, n, i);
      out.components[t] += sgn * acc;
    }
  }

  for (const auto& comp : out.components)
    if (comp.total_degree() > out.max_degree) out.max_degree = comp.total_degree();
  return out;
}

PolyCochain group_differential(const PolyCochain& f, const PolyGroup& g, const PolyAction& act) {
  GroupComplex cx(g, act);
  return cx.differential(f);
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set_exp(v, e);
      rec(v + 1, left - e);
      cur.set_exp(v, 0);
    }
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

DeltaSquaredReport delta_squared_check(const PolyGroup& g, const PolyAction& act, int n,
                                       unsigned max_degree) {
  GroupComplex cx(g, act);
  DeltaSquaredReport rep;
  for (const auto& m : monomials_up_to(n * g.dim, max_degree))
    for (std::size_t t = 0; t < act.a_dim; ++t) {
      PolyCochain f = monomial_cochain(n, g.dim, act.a_dim, m, t);
      PolyCochain ddf = cx.differential(cx.differential(f));
      ++rep.checked;
      for (const auto& comp : ddf.components)
        if (!comp.is_zero() && rep.ok) {
          rep.ok = false;
          rep.detail = "delta^2 != 0 on a degree-" + std::to_string(m.degree()) +
                       " monomial cochain at n = " + std::to_string(n);
        }
    }
  return rep;
}

namespace {

struct DegreeSlice {
  std::size_t h = 0;
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::vector<PolyCochain> representatives;
};

DegreeSlice cohomology_at_degree(const PolyGroup& g, const PolyAction& act, int p,
                                 unsigned bound, bool want_reps) {
  GroupComplex cx(g, act);
  const std::size_t d = g.dim, ad = act.a_dim;
  const auto monos = monomials_up_to(p * d, bound);
  const std::size_t ncols = monos.size() * ad;

  // coordinates of C^p(<= bound): (monomial rank) * a_dim + component
  std::map<Monomial, std::size_t> mono_rank;
  for (std::size_t i = 0; i < monos.size(); ++i) mono_rank[monos[i]] = i;

  // Z^p(bound): kernel of delta restricted to the truncated space
  std::map<std::pair<Monomial, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (std::size_t col = 0; col < ncols; ++col) {
    PolyCochain f = monomial_cochain(p, d, ad, monos[col / ad], col % ad);
    PolyCochain df = cx.differential(f);
    for (std::size_t s = 0; s < ad; ++s)
      for (const auto& [m, c] : df.components[s].terms()) {
        auto key = std::make_pair(m, s);
        auto it = row_of.find(key);
        std::size_t r;
        if (it == row_of.end()) {
          r = rows.size();
          row_of.emplace(key, r);
          rows.emplace_back();
        } else {
          r = it->second;
        }
        rows[r].push_back({col, c});
      }
  }
  Subspace z = kernel_of_sparse_rows(rows, ncols);

  // B^p(bound) ∩ C^p(<= bound): combinations of coboundaries of truncated
  // (p-1)-cochains whose high-degree parts cancel
  Subspace b = Subspace::zero(ncols);
  if (p >= 1) {
    const auto prev = monomials_up_to((p - 1) * d, bound);
    const std::size_t nprev = prev.size() * ad;
    std::vector<std::vector<Rational>> low(nprev, std::vector<Rational>(ncols));
    std::map<std::pair<Monomial, std::size_t>, std::size_t> hi_row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> hi_rows;
    for (std::size_t l = 0; l < nprev; ++l) {
      PolyCochain psi = monomial_cochain(p - 1, d, ad, prev[l / ad], l % ad);
      PolyCochain dpsi = cx.differential(psi);
      for (std::size_t s = 0; s < ad; ++s)
        for (const auto& [m, c] : dpsi.components[s].terms()) {
          if (m.degree() <= bound) {
            low[l][mono_rank.at(m) * ad + s] = c;
          } else {
            auto key = std::make_pair(m, s);
            auto it = hi_row_of.find(key);
            std::size_t r;
            if (it == hi_row_of.end()) {
              r = hi_rows.size();
              hi_row_of.emplace(key, r);
              hi_rows.emplace_back();
            } else {
              r = it->second;
            }
            hi_rows[r].push_back({l, c});
          }
        }
    }
    Subspace lam = kernel_of_sparse_rows(hi_rows, nprev);
    std::vector<std::vector<Rational>> gens;
    for (std::size_t i = 0; i < lam.dim(); ++i) {
      auto coeffs = lam.basis_vector(i);
      std::vector<Rational> w(ncols);
      for (std::size_t l = 0; l < nprev; ++l) {
        if (coeffs[l] == 0) continue;
        for (std::size_t cidx = 0; cidx < ncols; ++cidx)
          if (low[l][cidx] != 0) w[cidx] += coeffs[l] * low[l][cidx];
      }
      gens.push_back(std::move(w));
    }
    b = Subspace::span(ncols, gens);
  }

  QuotientResult q = quotient_dim(z, b);
  DegreeSlice out;
  out.h = q.dim;
  out.z_dim = z.dim();
  out.b_dim = b.dim();
  if (want_reps) {
    for (const auto& rep : q.representatives) {
      PolyCochain pc;
      pc.n = p;
      pc.group_dim = d;
      pc.a_dim = ad;
      pc.components.assign(ad, MultiPoly(p * d));
      for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep[i] != 0) pc.components[i % ad].add_term(monos[i / ad], rep[i]);
      for (const auto& comp : pc.components)
        if (comp.total_degree() > pc.max_degree) pc.max_degree = comp.total_degree();
      out.representatives.push_back(std::move(pc));
    }
  }
  return out;
}

}  // namespace

TruncatedCohomology truncated_group_cohomology(const PolyGroup& g, const PolyAction& act, int p,
                                               unsigned max_degree, int jobs) {
  if (p < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  std::vector<unsigned> degrees;
  for (unsigned b = (max_degree >= 2 ? max_degree - 2 : 0); b <= max_degree; ++b)
    degrees.push_back(b);

  std::vector<DegreeSlice> slices(degrees.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    tasks.push_back([&, i] {
      slices[i] = cohomology_at_degree(g, act, p, degrees[i], degrees[i] == max_degree);
    });
  run_tasks(tasks, jobs);

  TruncatedCohomology out;
  out.p = p;
  out.max_degree = max_degree;
  for (std::size_t i = 0; i < degrees.size(); ++i) out.history.push_back({degrees[i], slices[i].h});
  const DegreeSlice& last = slices.back();
  out.h = last.h;
  out.z_dim = last.z_dim;
  out.b_dim = last.b_dim;
  out.representatives = last.representatives;
  out.stabilized = degrees.size() == 3 && slices[0].h == slices[1].h && slices[1].h == slices[2].h;
  return out;
}

Cochain differentiate_cocycle(const PolyCochain& f, const PolyGroup& g, const PolyAction& act) {
  if (f.n != 2) throw Error(ErrorKind::ShapeMismatch, "expected a 2-cochain");
  if (f.group_dim != g.dim || f.a_dim != act.a_dim)
    throw Error(ErrorKind::ShapeMismatch, "cochain does not match the group/action");
  {
    GroupComplex cx(g, act);
    PolyCochain df = cx.differential(f);
    for (const auto& comp : df.components)
      if (!comp.is_zero())
        throw Error(ErrorKind::NotACocycle, "input is not a polynomial group 2-cocycle");
  }

  const std::size_t d = g.dim, ad = act.a_dim;
  LieAlgebra lie = lie_algebra_of(g);
  LieModule mod = differentiate_action(g, act);

  Cochain omega = zero_cochain(2, d, ad);
  TupleIndex idx(d, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::size_t r = idx.rank((std::uint64_t(1) << i) | (std::uint64_t(1) << j));
      for (std::size_t t = 0; t < ad; ++t) {
        Monomial xiyj(2 * d), xjyi(2 * d);
        xiyj.set_exp(i, 1);
        xiyj.set_exp(d + j, 1);
        xjyi.set_exp(j, 1);
        xjyi.set_exp(d + i, 1);
        omega.coords[r * ad + t] = f.components[t].coeff(xiyj) - f.components[t].coeff(xjyi);
      }
    }

  RatMatrix d2 = ce_differential(2, lie, mod);
  for (const auto& x : d2.apply(omega.coords))
    if (x != 0)
      throw Error(ErrorKind::NotACocycle, "extracted bilinear part is not a Lie cocycle");
  return omega;
}

VanEstReport vanest_compare(const PolyGroup& g, const PolyAction& act, int p,
                            unsigned max_degree, int jobs) {
  VanEstReport rep;
  rep.p = p;
  rep.max_degree = max_degree;

  TruncatedCohomology tr;
  std::size_t lie_h = 0;
  std::vector<std::function<void()>> tasks;
  tasks.push_back([&] { tr = truncated_group_cohomology(g, act, p, max_degree, 1); });
  tasks.push_back([&] {
    LieModule mod = differentiate_action(g, act);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < g.dim; ++i) all.push_back(i);
    LeviPair pair{mod.algebra, {}, all};
    lie_h = relative_cohomology(p, pair, mod).dim;
  });
  // the degree sweep inside the truncation dominates; give it the workers
  if (jobs > 1) {
    std::vector<std::function<void()>> par;
    par.push_back([&] { tr = truncated_group_cohomology(g, act, p, max_degree, jobs - 1); });
    par.push_back(tasks[1]);
    run_tasks(par, 2);
  } else {
    run_tasks(tasks, 1);
  }

  rep.group_h = tr.h;
  rep.lie_h = lie_h;
  rep.stabilized = tr.stabilized;
  rep.history = tr.history;
  rep.match = (tr.h == lie_h);
  return rep;
}

void require_match(const VanEstReport& report) {
  if (report.stabilized && !report.match)
    throw Error(ErrorKind::Mismatch,
                "group cohomology h = " + std::to_string(report.group_h) +
                    " != Lie side h = " + std::to_string(report.lie_h));
}

}  // namespace algext
