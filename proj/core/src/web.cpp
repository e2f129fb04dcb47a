#include "weave/web.hpp"

#include <algorithm>
#include <map>

#include "weave/errors.hpp"
#include "weave/poly_ops.hpp"

namespace weave {

namespace {

std::size_t x_var(int k) { return static_cast<std::size_t>(k); }
std::size_t p_var(int n, int k) { return static_cast<std::size_t>(n + k); }

std::vector<Chart> resolve(const std::vector<Chart>& charts, int n) {
  if (charts.empty()) return standard_atlas(n);
  for (const Chart& c : charts) validate_chart(c, n);
  return charts;
}

std::vector<MultiPoly> chart_forms(const CiWeb& w, const Chart& c) {
  std::vector<MultiPoly> out;
  for (const BiHomogPde& s : w.pdes()) out.push_back(chart_form(s, c).F);
  return out;
}

std::string entry_label(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

/// Every entry of m reduces to zero modulo the basis.
std::vector<std::string> entries_outside(const PolyMatrix& m, const IdealBasis& basis) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!normal_form(m(r, c), basis).is_zero()) out.push_back(entry_label(r, c));
    }
  }
  return out;
}

/// Aggregates per-chart verdicts; at least one non-degenerate chart is required.
WebVerdict aggregate(std::vector<ChartVerdict> charts) {
  WebVerdict v;
  bool any = false;
  bool all = true;
  for (const ChartVerdict& c : charts) {
    if (c.degenerate) continue;
    any = true;
    all = all && c.holds;
  }
  if (!any) throw InputError("web violates covering condition: the critical determinant vanishes in every chart");
  v.holds = all;
  v.charts = std::move(charts);
  return v;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = start; v < n; ++v) {
    cur.push_back(v);
    choose(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

/// Coefficients of f as a polynomial in the p variables.
std::vector<MultiPoly> p_coefficients(const MultiPoly& f, int n) {
  std::map<Exponents, MultiPoly> by_p;
  for (const auto& [e, c] : f.terms()) {
    Exponents pe(e.begin() + n, e.end());
    Exponents xe(e);
    std::fill(xe.begin() + n, xe.end(), 0);
    auto it = by_p.try_emplace(pe, MultiPoly(f.vars())).first;
    it->second.add_term(xe, c);
  }
  std::vector<MultiPoly> out;
  for (auto& [pe, coeff] : by_p) out.push_back(std::move(coeff));
  return out;
}

void form_warnings(const MultiPoly& f, int n, const std::string& where, std::vector<std::string>& out) {
  if (f.is_constant()) return;
  std::vector<MultiPoly> parts{f};
  for (std::size_t v = 0; v < f.vars()->size(); ++v) {
    MultiPoly d = partial_derivative(f, v);
    if (!d.is_zero()) parts.push_back(std::move(d));
  }
  const MultiPoly g = multivar_gcd(parts);
  if (!g.is_constant()) {
    out.push_back(where + ": chart form may not be reduced (repeated factor " + g.to_string() + ")");
  }
  const auto coeffs = p_coefficients(f, n);
  const MultiPoly common = multivar_gcd(coeffs);
  if (!common.is_constant()) {
    out.push_back(where + ": coefficients A_I share the factor " + common.to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Web

CiWeb::CiWeb(int n, std::vector<BiHomogPde> pdes, bool asserted_irreducible, bool asserted_quasi_smooth)
    : n_(n),
      pdes_(std::move(pdes)),
      asserted_irreducible_(asserted_irreducible),
      asserted_quasi_smooth_(asserted_quasi_smooth) {
  if (n < 2) throw InputError("a web needs n >= 2");
  if (pdes_.size() != static_cast<std::size_t>(n - 1)) {
    throw InputError("a CI-web on P_" + std::to_string(n) + " needs exactly " + std::to_string(n - 1) +
                     " PDEs, got " + std::to_string(pdes_.size()));
  }
  for (const BiHomogPde& s : pdes_) {
    if (s.n() != n) throw InputError("PDE lives on P_" + std::to_string(s.n()) + ", expected P_" + std::to_string(n));
  }
}

MultiDegreeData CiWeb::multidegree_data() const {
  std::vector<Bidegree> pairs;
  for (const BiHomogPde& s : pdes_) pairs.push_back(s.bidegree());
  return MultiDegreeData(n_, std::move(pairs));
}

Integer weight(const CiWeb& w) { return w.multidegree_data().weight(); }

std::vector<int> multidegree(const CiWeb& w) {
  std::vector<int> out;
  for (const BiHomogPde& s : w.pdes()) out.push_back(s.bidegree().x);
  return out;
}

Integer web_degree(const CiWeb& w) { return w.multidegree_data().degree(); }

// ---------------------------------------------------------------------------
// Chart data

ChartWebData chart_web_data(int n, const Chart& c, std::vector<MultiPoly> forms, const IdealOptions& options) {
  validate_chart(c, n);
  if (forms.size() != static_cast<std::size_t>(n - 1)) throw UsageError("chart web data needs n - 1 forms");
  const VarTablePtr vars = VarTable::chart(n);
  for (const MultiPoly& f : forms) {
    if (!same_table(f.vars(), vars)) throw UsageError("chart forms must use x1..xn, p1..p(n-1)");
  }
  const std::size_t m = forms.size();
  PolyMatrix jac(vars, m, m);
  PolyMatrix theta(vars, m, m);
  for (std::size_t g = 0; g < m; ++g) {
    const MultiPoly dxn = partial_derivative(forms[g], x_var(n - 1));
    for (std::size_t b = 0; b < m; ++b) {
      const int k = static_cast<int>(b);
      jac(g, b) = partial_derivative(forms[g], p_var(n, k));
      theta(g, b) = partial_derivative(forms[g], x_var(k)) + MultiPoly::variable(vars, p_var(n, k)) * dxn;
    }
  }
  MultiPoly delta = poly_det(jac);
  PolyMatrix L = poly_adjugate(jac);
  PolyMatrix L_theta = L * theta;
  std::vector<MultiPoly> gens = forms;
  gens.push_back(delta);
  IdealBasis critical = buchberger(gens, MonomialOrder::grevlex(), options);
  const bool degenerate = delta.is_zero();
  return ChartWebData{c,
                      n,
                      std::move(forms),
                      std::move(jac),
                      std::move(delta),
                      std::move(theta),
                      std::move(L),
                      std::move(L_theta),
                      degenerate,
                      std::move(critical)};
}

ChartWebData chart_web_data(const CiWeb& w, const Chart& c, const IdealOptions& options) {
  validate_chart(c, w.n());
  return chart_web_data(w.n(), c, chart_forms(w, c), options);
}

// ---------------------------------------------------------------------------
// Verdicts

ChartVerdict dicritical_in_chart(const ChartWebData& data, const IdealOptions&) {
  ChartVerdict v{data.chart, data.degenerate, false, std::nullopt, {}};
  if (data.degenerate) return v;
  v.failures = entries_outside(data.L_theta, data.critical_ideal);
  v.holds = v.failures.empty();
  return v;
}

ChartVerdict hyperdicritical_in_chart(const ChartWebData& data, const IdealOptions& options) {
  ChartVerdict v{data.chart, data.degenerate, false, std::nullopt, {}};
  const IdealBasis web_ideal = buchberger(data.F, MonomialOrder::grevlex(), options);
  v.vanishes_on_web = entries_outside(data.theta, web_ideal).empty();
  if (data.degenerate) return v;
  v.failures = entries_outside(data.theta, data.critical_ideal);
  v.holds = v.failures.empty();
  return v;
}

WebVerdict is_dicritical(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& options) {
  std::vector<ChartVerdict> out;
  for (const Chart& c : resolve(charts, w.n())) out.push_back(dicritical_in_chart(chart_web_data(w, c, options), options));
  return aggregate(std::move(out));
}

WebVerdict is_hyperdicritical(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& options) {
  std::vector<ChartVerdict> out;
  for (const Chart& c : resolve(charts, w.n())) {
    out.push_back(hyperdicritical_in_chart(chart_web_data(w, c, options), options));
  }
  bool on_web = true;
  for (const ChartVerdict& v : out) on_web = on_web && v.vanishes_on_web.value_or(false);
  WebVerdict agg = aggregate(std::move(out));
  agg.vanishes_on_web = on_web;
  return agg;
}

bool linearizable_in_chart(const MultiPoly& f, int n) {
  if (f.is_zero()) throw UsageError("linearizability of the zero form");
  const MultiPoly dxn = partial_derivative(f, x_var(n - 1));
  for (int a = 0; a < n - 1; ++a) {
    const MultiPoly t = partial_derivative(f, x_var(a)) + MultiPoly::variable(f.vars(), p_var(n, a)) * dxn;
    if (!divide_exact(t, f)) return false;
  }
  return true;
}

WebVerdict is_linearizable_pde(const BiHomogPde& s, const std::vector<Chart>& charts) {
  WebVerdict v;
  v.holds = true;
  for (const Chart& c : resolve(charts, s.n())) {
    ChartVerdict cv{c, false, linearizable_in_chart(chart_form(s, c).F, s.n()), std::nullopt, {}};
    v.holds = v.holds && cv.holds;
    v.charts.push_back(std::move(cv));
  }
  return v;
}

bool is_algebraic_web(const CiWeb& w) {
  const auto md = multidegree(w);
  return std::all_of(md.begin(), md.end(), [](int d) { return d == 0; });
}

bool smooth_in_chart(const std::vector<MultiPoly>& forms, int n, const IdealOptions& options) {
  if (forms.empty()) throw UsageError("smoothness check needs at least one form");
  const VarTablePtr& vars = forms.front().vars();
  const std::size_t cols = vars->size();
  const std::size_t rows = forms.size();
  PolyMatrix jac(vars, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) jac(r, c) = partial_derivative(forms[r], c);
  }
  std::vector<MultiPoly> gens = forms;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  choose(cols, rows, 0, cur, subsets);
  std::vector<std::size_t> all_rows(rows);
  for (std::size_t r = 0; r < rows; ++r) all_rows[r] = r;
  for (const auto& s : subsets) {
    MultiPoly minor = poly_det(jac.select(all_rows, s));
    if (minor.is_zero()) continue;
    if (minor.is_constant()) return true;
    gens.push_back(std::move(minor));
  }
  (void)n;
  return is_trivial_ideal(gens, options);
}

WebVerdict smoothness_chart_check(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& options) {
  WebVerdict v;
  v.holds = true;
  for (const Chart& c : resolve(charts, w.n())) {
    ChartVerdict cv{c, false, smooth_in_chart(chart_forms(w, c), w.n(), options), std::nullopt, {}};
    v.holds = v.holds && cv.holds;
    v.charts.push_back(std::move(cv));
  }
  return v;
}

std::vector<MultiPoly> caustic_generators(const ChartWebData& data, const IdealOptions& options) {
  std::vector<MultiPoly> gens = data.F;
  gens.push_back(data.delta_p);
  return eliminate(gens, VarGroup::ChartP, options);
}

std::vector<MultiPoly> caustic_generators(const CiWeb& w, const Chart& c, const IdealOptions& options) {
  validate_chart(c, w.n());
  std::vector<MultiPoly> gens = chart_forms(w, c);
  std::vector<MultiPoly> forms = gens;
  const std::size_t m = forms.size();
  PolyMatrix jac(forms.front().vars(), m, m);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t b = 0; b < m; ++b) jac(g, b) = partial_derivative(forms[g], p_var(w.n(), static_cast<int>(b)));
  }
  gens.push_back(poly_det(jac));
  return eliminate(gens, VarGroup::ChartP, options);
}

// ---------------------------------------------------------------------------
// Warnings and certificate

std::vector<std::string> pde_warnings(const BiHomogPde& s, const std::vector<Chart>& charts) {
  std::vector<std::string> out;
  for (const Chart& c : resolve(charts, s.n())) {
    form_warnings(chart_form(s, c).F, s.n(), "chart (" + c.label() + ")", out);
  }
  return out;
}

std::vector<std::string> web_warnings(const CiWeb& w, const std::vector<Chart>& charts) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < w.pdes().size(); ++a) {
    for (const Chart& c : resolve(charts, w.n())) {
      form_warnings(chart_form(w.pdes()[a], c).F, w.n(),
                    "PDE " + std::to_string(a + 1) + ", chart (" + c.label() + ")", out);
    }
  }
  return out;
}

Certificate certify(const CiWeb& w, const std::vector<Chart>& charts, const IdealOptions& options) {
  Certificate cert;
  const MultiDegreeData md = w.multidegree_data();
  cert.weight = md.weight();
  cert.multidegree = multidegree(w);
  cert.degree = md.degree();
  cert.smooth = smoothness_chart_check(w, charts, options);
  cert.dicritical = is_dicritical(w, charts, options);
  cert.algebraic = is_algebraic_web(w);
  const bool quasi_smooth = cert.smooth.holds || w.asserted_quasi_smooth();
  cert.hypotheses_met = cert.weight >= 3 && quasi_smooth && cert.dicritical.holds;
  cert.contradiction = cert.hypotheses_met && !cert.algebraic;
  cert.script_N = script_N(md);
  cert.bott_number = bott_number(md);
  cert.bott_relation = Rational(cert.bott_number) == Rational(cert.weight) * cert.script_N;
  cert.caustic = caustic_certificate(md);
  cert.warnings = web_warnings(w, charts);
  if (cert.contradiction) {
    cert.warnings.push_back("CONTRADICTION: check irreducibility assumption");
  }
  return cert;
}

}  // namespace weave
