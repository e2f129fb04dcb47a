#include "weave/contact.hpp"

#include <algorithm>
#include <map>

#include "linear_solve.hpp"
#include "weave/errors.hpp"
#include "weave/ideal.hpp"

namespace weave {

namespace {

std::size_t x_var(int k) { return static_cast<std::size_t>(k); }
std::size_t p_var(int n, int k) { return static_cast<std::size_t>(n + k); }

/// Homogeneous coordinates X_0..X_n of a point of chart c, over the chart table.
std::vector<MultiPoly> point_coordinates(const Chart& c, const VarTablePtr& vars) {
  const int n = vars->n();
  std::vector<MultiPoly> X(static_cast<std::size_t>(n + 1), MultiPoly(vars));
  X[static_cast<std::size_t>(c.i)] = MultiPoly::constant(vars, 1);
  const auto xs = c.x_indices(n);
  for (int k = 0; k < n; ++k) X[static_cast<std::size_t>(xs[static_cast<std::size_t>(k)])] = MultiPoly::variable(vars, x_var(k));
  return X;
}

/// Homogeneous coordinates u_0..u_n of the hyperplane of chart c.
std::vector<MultiPoly> hyperplane_coordinates(const Chart& c, const VarTablePtr& vars) {
  const int n = vars->n();
  std::vector<MultiPoly> u(static_cast<std::size_t>(n + 1), MultiPoly(vars));
  u[static_cast<std::size_t>(c.j)] = MultiPoly::constant(vars, -1);
  const auto ps = c.p_indices(n);
  const auto xs = c.x_indices(n);
  MultiPoly ui = MultiPoly::variable(vars, x_var(n - 1));
  for (int k = 0; k < n - 1; ++k) {
    const MultiPoly p = MultiPoly::variable(vars, p_var(n, k));
    u[static_cast<std::size_t>(ps[static_cast<std::size_t>(k)])] = p;
    // p_k pairs with the x of the same homogeneous index, which is x_{k+1}.
    ui -= p * MultiPoly::variable(vars, x_var(k));
  }
  u[static_cast<std::size_t>(c.i)] = ui;
  return u;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = remaining;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// Bihomogeneous monomials of bidegree (delta, d) not divisible by u_0 X_0.
std::vector<Exponents> canonical_monomials(int n, int delta, int d) {
  const std::size_t half = static_cast<std::size_t>(n + 1);
  std::vector<Exponents> out;
  for (const Exponents& ex : monomials_of_degree(half, delta)) {
    for (const Exponents& eu : monomials_of_degree(half, d)) {
      if (ex[0] > 0 && eu[0] > 0) continue;
      Exponents e(ex);
      e.insert(e.end(), eu.begin(), eu.end());
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// H with bidegree (delta, d) and chart form f, if one exists.
std::optional<MultiPoly> solve_at(const MultiPoly& f, const Chart& c, int n, int delta, int d) {
  const VarTablePtr bh = VarTable::bihomogeneous(n);
  const auto cols = canonical_monomials(n, delta, d);
  std::vector<MultiPoly> images;
  images.reserve(cols.size());
  std::map<Exponents, std::size_t> rows;
  for (const auto& [e, coeff] : f.terms()) rows.emplace(e, 0);
  for (const Exponents& e : cols) {
    images.push_back(restrict_to_chart(MultiPoly::monomial(bh, e), c));
    for (const auto& [ie, coeff] : images.back().terms()) rows.emplace(ie, 0);
  }
  std::size_t next = 0;
  for (auto& [e, idx] : rows) idx = next++;
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  std::vector<Rational> b(rows.size(), Rational(0));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (const auto& [e, coeff] : images[k].terms()) a[rows.at(e)][k] = coeff;
  }
  for (const auto& [e, coeff] : f.terms()) b[rows.at(e)] = coeff;
  auto sol = detail::solve_linear(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  MultiPoly h(bh);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if ((*sol)[k] != 0) h.add_term(cols[k], (*sol)[k]);
  }
  return h;
}

/// Bidegree of the homogenization obtained by substituting x_n = w + sum p x.
Bidegree homogenization_bound(const MultiPoly& f, int n) {
  Bidegree bound{0, 1};
  for (const auto& [e, coeff] : f.terms()) {
    int xdeg = 0;
    int pdeg = 0;
    for (int k = 0; k < n - 1; ++k) xdeg += e[x_var(k)];
    for (int k = 0; k < n - 1; ++k) pdeg += e[p_var(n, k)];
    const int xn = e[x_var(n - 1)];
    bound.x = std::max(bound.x, xdeg + xn);
    bound.u = std::max(bound.u, pdeg + xn);
  }
  return bound;
}

using RfMatrix = std::vector<std::vector<RationalFunction>>;

RfMatrix drop(const RfMatrix& m, std::size_t r, std::size_t c) {
  RfMatrix out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (a == r) continue;
    std::vector<RationalFunction> row;
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (b != c) row.push_back(m[a][b]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

RationalFunction rf_det(const RfMatrix& m, const VarTablePtr& vars) {
  if (m.empty()) return RationalFunction(MultiPoly::constant(vars, 1));
  if (m.size() == 1) return m[0][0];
  RationalFunction total{MultiPoly(vars)};
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[0][c].is_zero()) continue;
    const RationalFunction term = m[0][c] * rf_det(drop(m, 0, c), vars);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

RfMatrix rf_adjugate(const RfMatrix& m, const VarTablePtr& vars) {
  const std::size_t size = m.size();
  RfMatrix adj(size, std::vector<RationalFunction>(size, RationalFunction(MultiPoly(vars))));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const RationalFunction cof = rf_det(drop(m, r, c), vars);
      adj[c][r] = (r + c) % 2 == 0 ? cof : -cof;
    }
  }
  return adj;
}

/// Divides out every power of each factor.
MultiPoly strip(MultiPoly f, const std::vector<MultiPoly>& factors) {
  for (const MultiPoly& g : factors) {
    if (g.is_constant()) continue;
    while (auto q = divide_exact(f, g)) f = std::move(*q);
  }
  return f;
}

bool depends_on_group(const MultiPoly& f, VarGroup g) {
  for (std::size_t v : f.vars()->members(g)) {
    if (f.depends_on(v)) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Charts

std::vector<int> Chart::x_indices(int n) const {
  std::vector<int> out;
  for (int r = 0; r <= n; ++r) {
    if (r != i && r != j) out.push_back(r);
  }
  out.push_back(j);
  return out;
}

std::vector<int> Chart::p_indices(int n) const {
  std::vector<int> out;
  for (int r = 0; r <= n; ++r) {
    if (r != i && r != j) out.push_back(r);
  }
  return out;
}

std::string Chart::label() const { return std::to_string(i) + "," + std::to_string(j); }

void validate_chart(const Chart& c, int n) {
  if (n < 1 || c.i < 0 || c.j < 0 || c.i > n || c.j > n || c.i == c.j) {
    throw UsageError("invalid chart (" + c.label() + ") for n = " + std::to_string(n));
  }
}

std::vector<Chart> standard_atlas(int n) {
  std::vector<Chart> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i != j) out.push_back({i, j});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Incidence form and PDEs

MultiPoly incidence_form(const VarTablePtr& vars) {
  const auto xs = vars->members(VarGroup::X);
  const auto us = vars->members(VarGroup::U);
  if (xs.size() != us.size() || xs.empty()) throw UsageError("incidence form needs a bihomogeneous table");
  MultiPoly l(vars);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    l += MultiPoly::variable(vars, xs[k]) * MultiPoly::variable(vars, us[k]);
  }
  return l;
}

MultiPoly reduce_mod_incidence(const MultiPoly& h) {
  const VarTablePtr& vars = h.vars();
  const std::size_t u0 = vars->members(VarGroup::U).at(0);
  const IdealBasis basis(vars, {incidence_form(vars)}, MonomialOrder::block({u0}, vars->size()), false);
  return normal_form(h, basis);
}

BiHomogPde::BiHomogPde(MultiPoly h) : h_(std::move(h)) {
  const int n = h_.vars()->n();
  if (n < 1 || !same_table(h_.vars(), VarTable::bihomogeneous(n))) {
    throw InputError("PDE must be written in X0..Xn, u0..un");
  }
  if (h_.is_zero()) throw InputError("zero polynomial is not a PDE");
  auto bd = bidegree_of(h_);
  if (!bd) throw InputError("polynomial is not bi-homogeneous");
  if (bd->u == 0) throw InputError("u-degree d = 0: not a PDE");
  if (reduce_mod_incidence(h_).is_zero()) throw InputError("polynomial is divisible by incidence form");
  bidegree_ = *bd;
}

// ---------------------------------------------------------------------------
// Chart forms

MultiPoly restrict_to_chart(const MultiPoly& h, const Chart& c) {
  const int n = h.vars()->n();
  validate_chart(c, n);
  const VarTablePtr chart_vars = VarTable::chart(n);
  const auto X = point_coordinates(c, chart_vars);
  const auto u = hyperplane_coordinates(c, chart_vars);
  const auto xs = h.vars()->members(VarGroup::X);
  const auto us = h.vars()->members(VarGroup::U);
  Substitution sub(h.vars(), chart_vars);
  for (int r = 0; r <= n; ++r) {
    sub.set(xs[static_cast<std::size_t>(r)], X[static_cast<std::size_t>(r)]);
    sub.set(us[static_cast<std::size_t>(r)], u[static_cast<std::size_t>(r)]);
  }
  return substitute(h, sub).result;
}

ChartForm chart_form(const BiHomogPde& s, const Chart& c) {
  ChartForm f{c, s.n(), restrict_to_chart(s.H(), c), s, std::nullopt};
  return f;
}

ChartForm raw_chart_form(int n, const Chart& c, MultiPoly f, std::optional<Bidegree> declared) {
  validate_chart(c, n);
  if (!same_table(f.vars(), VarTable::chart(n))) throw UsageError("chart form must use x1..xn, p1..p(n-1)");
  if (declared && declared->u < 1) throw UsageError("declared bidegree needs d >= 1");
  return ChartForm{c, n, std::move(f), std::nullopt, declared};
}

BiHomogPde rehomogenize(const ChartForm& f) {
  validate_chart(f.chart, f.n);
  if (f.F.is_zero()) throw InputError("cannot rehomogenize the zero polynomial");
  if (f.declared) {
    auto h = solve_at(f.F, f.chart, f.n, f.declared->x, f.declared->u);
    if (!h) {
      throw InputError("no bi-homogeneous polynomial of bidegree (" + std::to_string(f.declared->x) +
                       "," + std::to_string(f.declared->u) + ") restricts to " + f.F.to_string());
    }
    return BiHomogPde(std::move(*h));
  }
  const Bidegree bound = homogenization_bound(f.F, f.n);
  for (int total = 1; total <= bound.x + bound.u; ++total) {
    for (int delta = 0; delta <= std::min(total - 1, bound.x); ++delta) {
      const int d = total - delta;
      if (d > bound.u) continue;
      if (auto h = solve_at(f.F, f.chart, f.n, delta, d)) return BiHomogPde(std::move(*h));
    }
  }
  throw InputError("no bi-homogeneous representative found for " + f.F.to_string());
}

// ---------------------------------------------------------------------------
// Transitions

ChartTransition coordinate_change(int n, std::vector<RationalFunction> x_map) {
  if (n < 1 || x_map.size() != static_cast<std::size_t>(n)) throw UsageError("coordinate change needs n images");
  const VarTablePtr vars = VarTable::chart(n);
  for (const auto& f : x_map) {
    if (!same_table(f.vars(), vars)) throw UsageError("coordinate change not over the chart table");
    for (std::size_t v : vars->members(VarGroup::ChartP)) {
      if (f.num().depends_on(v) || f.den().depends_on(v)) throw UsageError("base coordinates cannot depend on p");
    }
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  ChartTransition t{{0, n}, {0, n}, n, vars, std::move(x_map), {}, {}, {},
                    RationalFunction(MultiPoly(vars)), RationalFunction(MultiPoly(vars))};
  t.J.assign(nn, {});
  for (std::size_t a = 0; a < nn; ++a) {
    for (std::size_t b = 0; b < nn; ++b) t.J[a].push_back(t.x_map[a].derivative(x_var(static_cast<int>(b))));
  }
  t.delta_M = rf_det(t.J, vars);
  if (t.delta_M.is_zero()) throw UsageError("coordinate change is not invertible");
  t.K = rf_adjugate(t.J, vars);

  // omega = dx_n - sum p dx transforms through K; p'_a = -omega'_a / omega'_n.
  const std::size_t last = nn - 1;
  auto omega = [&](std::size_t col) {
    RationalFunction acc = t.K[last][col];
    for (std::size_t beta = 0; beta < last; ++beta) {
      acc = acc - RationalFunction(MultiPoly::variable(vars, p_var(n, static_cast<int>(beta)))) * t.K[beta][col];
    }
    return acc;
  };
  t.delta_T = omega(last);
  if (t.delta_T.is_zero()) throw UsageError("degenerate coordinate change");
  for (std::size_t alpha = 0; alpha < last; ++alpha) t.p_map.push_back(-(omega(alpha) / t.delta_T));
  return t;
}

ChartTransition transition(const Chart& c1, const Chart& c2, int n) {
  validate_chart(c1, n);
  validate_chart(c2, n);
  const VarTablePtr vars = VarTable::chart(n);
  const auto X = point_coordinates(c1, vars);
  const MultiPoly& denom = X[static_cast<std::size_t>(c2.i)];
  std::vector<RationalFunction> x_map;
  for (int idx : c2.x_indices(n)) x_map.emplace_back(X[static_cast<std::size_t>(idx)], denom);
  ChartTransition t = coordinate_change(n, std::move(x_map));
  t.from = c1;
  t.to = c2;
  return t;
}

std::vector<Rational> transport_point(const ChartTransition& t, std::span<const Rational> point) {
  if (point.size() != t.vars->size()) throw UsageError("point has the wrong number of coordinates");
  std::vector<Rational> out;
  for (const auto& f : t.x_map) out.push_back(f.evaluate(point));
  for (const auto& f : t.p_map) out.push_back(f.evaluate(point));
  return out;
}

TransportedForm transport_form(const ChartTransition& t, const MultiPoly& f_to) {
  if (!same_table(f_to.vars(), t.vars)) throw UsageError("form is not over the chart table");
  Substitution sub(t.vars, t.vars);
  for (std::size_t k = 0; k < t.x_map.size(); ++k) sub.set(x_var(static_cast<int>(k)), t.x_map[k].num(), t.x_map[k].den());
  for (std::size_t k = 0; k < t.p_map.size(); ++k) {
    sub.set(p_var(t.n, static_cast<int>(k)), t.p_map[k].num(), t.p_map[k].den());
  }
  auto r = substitute(f_to, sub);
  return {std::move(r.result), std::move(r.cleared)};
}

// ---------------------------------------------------------------------------
// Covariance

CovarianceResult covariance_details(const ChartForm& f1, const ChartForm& f2, int d) {
  if (f1.n != f2.n) throw UsageError("chart forms of different dimensions");
  CovarianceResult result;
  if (f1.F.is_zero() || f2.F.is_zero()) return result;
  const int n = f1.n;
  const ChartTransition t = transition(f1.chart, f2.chart, n);
  const TransportedForm pulled = transport_form(t, f2.F);
  if (pulled.F.is_zero()) return result;
  const RationalFunction ratio(pulled.F, pulled.cleared * f1.F);
  result.ratio = ratio;

  // Allowed factors in c1 coordinates: X_{i'} and u_{j'}.
  const auto X = point_coordinates(f1.chart, t.vars);
  const auto u = hyperplane_coordinates(f1.chart, t.vars);
  const std::vector<MultiPoly> factors{X[static_cast<std::size_t>(f2.chart.i)],
                                       u[static_cast<std::size_t>(f2.chart.j)]};
  const bool unit_shape =
      strip(ratio.num(), factors).is_constant() && strip(ratio.den(), factors).is_constant();

  const RationalFunction rho = ratio * (t.delta_T / t.delta_M).pow(d);
  result.rho = rho;
  const bool base_only =
      !depends_on_group(rho.num(), VarGroup::ChartP) && !depends_on_group(rho.den(), VarGroup::ChartP);
  result.holds = unit_shape && base_only;
  return result;
}

bool covariance_check(const ChartForm& f1, const ChartForm& f2, int d) {
  return covariance_details(f1, f2, d).holds;
}

bool covariance_check(const BiHomogPde& s, const Chart& c1, const Chart& c2) {
  return covariance_check(chart_form(s, c1), chart_form(s, c2), s.bidegree().u);
}

// ---------------------------------------------------------------------------
// Duality

BiHomogPde dual_pde(const BiHomogPde& s) {
  if (s.bidegree().x == 0) throw UsageError("dual has weight 0: not a PDE");
  const VarTablePtr& vars = s.H().vars();
  const auto xs = vars->members(VarGroup::X);
  const auto us = vars->members(VarGroup::U);
  Substitution sub(vars, vars);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sub.set(xs[k], MultiPoly::variable(vars, us[k]));
    sub.set(us[k], MultiPoly::variable(vars, xs[k]));
  }
  return BiHomogPde(substitute(s.H(), sub).result);
}

bool is_algebraic_pde(const BiHomogPde& s) { return s.bidegree().x == 0; }

}  // namespace weave
