// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion ran to completion, whatever its
// verdict; --strict makes any FAIL line exit 1. A harness error exits 2.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "weave/cohomology.hpp"
#include "weave/errors.hpp"
#include "weave/ideal.hpp"
#include "weave/poly_parse.hpp"
#include "weave/web.hpp"

using namespace weave;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failed checks; the first few are kept for the report line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    Outcome o;
    o.pass = failures_ == 0;
    o.detail = o.pass ? notes_ : std::to_string(failures_) + " failed check(s): " + detail_;
    return o;
  }

 private:
  int failures_ = 0;
  std::string detail_;
  std::string notes_;
};

MultiPoly H(int n, const char* text) { return parse_poly(text, VarTable::bihomogeneous(n)); }
MultiPoly F(int n, const char* text) { return parse_poly(text, VarTable::chart(n)); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

const Chart kChart02{0, 2};

// ---------------------------------------------------------------------------

Outcome clairaut_web() {
  Checks ck;
  const BiHomogPde s(H(2, "u1^2 + u2^2 - u0^2"));
  ck.expect(s.bidegree() == Bidegree{0, 2}, "bidegree (0,2)");
  const CiWeb w(2, {s});
  const ChartWebData d = chart_web_data(w, kChart02);
  ck.expect(d.F[0] == F(2, "p1^2 + 1 - (x2 - p1*x1)^2"), "chart form in chart (0,2)");
  ck.expect(d.theta.is_zero(), "theta identically zero");
  const WebVerdict hyper = is_hyperdicritical(w);
  ck.expect(hyper.holds && hyper.vanishes_on_web.value_or(false), "hyper-dicritical");
  const WebVerdict dic = is_dicritical(w);
  ck.expect(dic.charts.size() == 6, "six charts examined");
  for (const ChartVerdict& v : dic.charts) ck.expect(v.holds && !v.degenerate, "dicritical in chart " + v.chart.label());
  ck.expect(dic.holds, "aggregated dicritical");
  ck.expect(is_algebraic_web(w), "algebraic");
  const auto gens = caustic_generators(w, kChart02);
  ck.expect(gens.size() == 1 && proportional(gens[0], F(2, "x1^2 + x2^2 - 1")), "caustic generated by x1^2 + x2^2 - 1");
  return ck.outcome();
}

Outcome cusp_web() {
  Checks ck;
  const BiHomogPde s = rehomogenize(raw_chart_form(2, kChart02, F(2, "p1^2 - x1")));
  const CiWeb w(2, {s});
  const ChartWebData d = chart_web_data(w, kChart02);
  ck.expect(proportional(d.F[0], F(2, "p1^2 - x1")), "chart form p1^2 - x1");
  ck.expect(d.critical_ideal.generators() == std::vector<MultiPoly>{F(2, "p1"), F(2, "x1")}, "reduced basis {p1, x1}");
  const MultiPoly minus_one = F(2, "-1");
  ck.expect(normal_form(minus_one, d.critical_ideal) == minus_one, "normal form of -1 is -1");
  ck.expect(proportional(d.L_theta(0, 0), minus_one), "L*theta = [-1] up to scale");
  ck.expect(!dicritical_in_chart(d).holds, "not dicritical in chart (0,2)");
  ck.expect(!is_dicritical(w).holds, "not dicritical");
  ck.expect(!is_linearizable_pde(s).holds, "not linearizable");
  ck.expect(caustic_generators(w, kChart02) == std::vector<MultiPoly>{F(2, "x1")}, "caustic (x1)");
  ck.expect(smoothness_chart_check(w, {kChart02}).holds, "smooth in chart (0,2)");
  ck.note("smoothness checked in chart (0,2), the chart of the given form");
  return ck.outcome();
}

Outcome fermat_web() {
  Checks ck;
  const CiWeb w(2, {BiHomogPde(H(2, "u0^3 + u1^3 + u2^3"))});
  ck.expect(weight(w) == 3, "weight 3");
  ck.expect(multidegree(w) == std::vector<int>{0}, "multidegree (0)");
  const Certificate cert = certify(w);
  ck.expect(cert.dicritical.holds, "dicritical");
  ck.expect(cert.smooth.holds, "smooth");
  ck.expect(cert.hypotheses_met, "hypotheses met");
  ck.expect(cert.algebraic, "algebraic");
  ck.expect(!cert.contradiction, "no contradiction flag");
  return ck.outcome();
}

Outcome cohomology_suite() {
  Checks ck;
  constexpr auto inc = CohomRing::Incidence;
  for (int n = 2; n <= 4; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    ck.expect(nf(CohomClass::monomial(n, inc, n + 1, 0)).is_zero(), "xi^(n+1)" + tag);
    ck.expect(nf(CohomClass::monomial(n, inc, 0, n + 1)).is_zero(), "xi'^(n+1)" + tag);
    CohomClass rel(n, inc);
    for (int j = 0; j <= n; ++j) rel.add_term(j, n - j, j % 2 == 0 ? 1 : -1);
    ck.expect(nf(rel).is_zero(), "alternating relation" + tag);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      int poincare = 0;
      for (int a = 0; a <= n; ++a) poincare += (k - a >= 0 && k - a <= n - 1) ? 1 : 0;
      ck.expect(static_cast<int>(basis_monomials(n, inc, k).size()) == poincare, "basis count" + tag);
    }
    ck.expect(nf(CohomClass::monomial(n, inc, n - 1, n)) == CohomClass::monomial(n, inc, n, n - 1),
              "xi^(n-1) xi'^n" + tag);
    for (int j = 0; j <= n; ++j) {
      try {
        chern_T(n, j);
      } catch (const std::logic_error&) {
        ck.expect(false, "Chern recursion vs closed form" + tag);
      }
    }
    ck.expect(nf(chern_T(n, n)).is_zero(), "c_n(T) = 0" + tag);
  }
  return ck.outcome();
}

/// The 200 multi-degree tuples shared by the Bott and certificate criteria.
std::vector<MultiDegreeData> sampled_tuples() {
  std::mt19937 rng(5489u);
  std::uniform_int_distribution<int> pick_n(2, 4), pick_delta(0, 3), pick_d(1, 4);
  std::vector<MultiDegreeData> out;
  while (out.size() < 200) {
    const int n = pick_n(rng);
    std::vector<Bidegree> pairs;
    long weight = 1;
    for (int a = 0; a < n - 1; ++a) {
      const int delta = pick_delta(rng);
      const int d = pick_d(rng);
      pairs.push_back({delta, d});
      weight *= d;
    }
    if (weight < 3) continue;
    out.emplace_back(n, std::move(pairs));
  }
  return out;
}

std::string describe(const MultiDegreeData& m) {
  std::ostringstream out;
  out << "n=" << m.n() << " (";
  for (std::size_t a = 0; a < m.pairs().size(); ++a) {
    out << (a ? "," : "") << "(" << m.pairs()[a].x << "," << m.pairs()[a].u << ")";
  }
  out << ")";
  return out.str();
}

Outcome bott_bridge() {
  Checks ck;
  for (const MultiDegreeData& m : sampled_tuples()) {
    const Rational N = script_N(m);
    const bool all_zero = m.delta_bar() == 0;
    ck.expect(Rational(bott_number(m)) == Rational(m.weight()) * N, "bott = d*N at " + describe(m));
    ck.expect(N >= 0, "N >= 0 at " + describe(m));
    ck.expect((N == 0) == all_zero, "N = 0 iff all delta = 0 at " + describe(m));
  }
  return ck.outcome();
}

Outcome caustic_certificate_suite() {
  Checks ck;
  int zero_tuples = 0;
  for (const MultiDegreeData& m : sampled_tuples()) {
    const CausticCertificate c = caustic_certificate(m);
    if (!c.all_positive) {
      std::string coeffs;
      for (const Integer& a : c.coefficients) coeffs += (coeffs.empty() ? "" : ",") + to_string(a);
      ck.expect(false, "a_i = [" + coeffs + "] at " + describe(m));
    }
    if (m.n() == 4 && m.delta_bar() == 0) ++zero_tuples;
  }
  const CausticCertificate base = caustic_certificate(MultiDegreeData(2, {{0, 2}}));
  ck.expect(base.coefficients == std::vector<Integer>{6}, "a_2 = 6 at n=2, ((0,2))");
  ck.note(std::to_string(zero_tuples) + " sampled n=4 tuples with all delta = 0");
  return ck.outcome();
}

Outcome covariance_suite() {
  Checks ck;
  const std::vector<BiHomogPde> corpus{
      BiHomogPde(H(2, "u1^2 + u2^2 - u0^2")),
      BiHomogPde(H(2, "u0^3 + u1^3 + u2^3")),
      BiHomogPde(H(2, "X0*u1 + X1*u0")),
      BiHomogPde(H(2, "X0^2*u1 + X1^2*u0")),
      BiHomogPde(H(2, "X0*u1^2 - X1*u2^2")),
      BiHomogPde(H(2, "X2^3*u0^2*u1 + X0*X1^2*u2^3 - X1^3*u1^3")),
      BiHomogPde(H(2, "X1^2*u2^3 + 2*X2^2*u1^3 - X0*X2*u0^2*u1")),
  };
  const VarTablePtr bh = VarTable::bihomogeneous(2);
  int exact = 0, total = 0;
  for (const BiHomogPde& s : corpus) {
    const std::string tag = " for " + s.H().to_string();
    for (const Chart& c1 : standard_atlas(2)) {
      for (const Chart& c2 : standard_atlas(2)) {
        ck.expect(covariance_check(s, c1, c2), "covariance " + c1.label() + "->" + c2.label() + tag);
      }
      // H is determined on the incidence variety up to a scalar; powers of
      // X_i and u_j are units of the chart.
      const BiHomogPde back = rehomogenize(chart_form(s, c1));
      const Bidegree bd = back.bidegree();
      Exponents shift(bh->size(), 0);
      shift[static_cast<std::size_t>(c1.i)] = s.bidegree().x - bd.x;
      shift[static_cast<std::size_t>(3 + c1.j)] = s.bidegree().u - bd.u;
      const bool ok = bd.x <= s.bidegree().x && bd.u <= s.bidegree().u &&
                      proportional(reduce_mod_incidence(back.H().mul_term(shift, 1)), reduce_mod_incidence(s.H()));
      ck.expect(ok, "round trip in chart " + c1.label() + tag);
      ++total;
      if (proportional(back.H(), s.H())) ++exact;
    }
  }
  ck.note(std::to_string(exact) + "/" + std::to_string(total) + " round trips return H itself up to scalar");
  return ck.outcome();
}

Outcome ideal_oracle() {
  Checks ck;
  std::mt19937 rng(5489u);
  const VarTablePtr vars = VarTable::generic({"a", "b", "c"});
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 3), count(2, 3), terms(1, 3);
  const auto random_poly = [&](int max_degree, bool nonzero) {
    while (true) {
      MultiPoly p(vars);
      const int t = terms(rng);
      for (int k = 0; k < t; ++k) {
        Exponents e(3, 0);
        int budget = std::uniform_int_distribution<int>(0, max_degree)(rng);
        for (auto& x : e) {
          x = std::uniform_int_distribution<int>(0, budget)(rng);
          budget -= x;
        }
        p.add_term(e, coeff(rng));
      }
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  int members = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int g = count(rng);
    std::vector<MultiPoly> gens;
    for (int k = 0; k < g; ++k) gens.push_back(random_poly(3, true));
    MultiPoly member(vars);
    for (const MultiPoly& gk : gens) member += gk * random_poly(1, false);
    const MultiPoly candidate = random_poly(3, false);
    for (const MultiPoly& f : {member, candidate}) {
      const bool engine = ideal_member(f, gens);
      bool oracle = false;
      for (int extra = 3; extra <= 7 && !oracle; extra += 2) {
        oracle = check::macaulay_member(f, gens, std::max(f.total_degree(), 3) + extra);
      }
      members += engine ? 1 : 0;
      ck.expect(engine == oracle, "membership of " + f.to_string());
    }
    const IdealBasis b = buchberger(gens);
    const auto& bg = b.generators();
    for (std::size_t i = 0; i < bg.size(); ++i) {
      for (std::size_t j = i + 1; j < bg.size(); ++j) {
        ck.expect(normal_form(s_polynomial(bg[i], bg[j], b.order()), b).is_zero(), "S-polynomial reduces to 0");
      }
    }
  }
  ck.note(std::to_string(members) + "/100 candidates are members");
  return ck.outcome();
}

Outcome transition_suite() {
  Checks ck;
  const ChartTransition swap = transition({0, 2}, {0, 1}, 2);
  ck.expect(swap.p_map[0] == RationalFunction(F(2, "1"), F(2, "p1")), "swap gives p' = 1/p1");
  std::mt19937 rng(5489u);
  const auto atlas = standard_atlas(3);
  std::uniform_int_distribution<std::size_t> pick(0, atlas.size() - 1);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  int samples = 0;
  for (int attempt = 0; attempt < 5000 && samples < 100; ++attempt) {
    const Chart c1 = atlas[pick(rng)], c2 = atlas[pick(rng)], c3 = atlas[pick(rng)];
    std::vector<Rational> pt;
    for (int k = 0; k < 5; ++k) pt.push_back(make_rational(num(rng), den(rng)));
    std::vector<Rational> mid, direct, via;
    try {
      mid = transport_point(transition(c1, c2, 3), pt);
      direct = transport_point(transition(c1, c3, 3), pt);
      via = transport_point(transition(c2, c3, 3), mid);
    } catch (const UsageError&) {
      continue;  // outside an overlap
    }
    ++samples;
    ck.expect(via == direct, "composition " + c1.label() + "->" + c2.label() + "->" + c3.label());
  }
  ck.expect(samples == 100, "100 sample points in triple overlaps");
  return ck.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria{
      {1, "Clairaut conic web", 5, clairaut_web},
      {2, "cusp web", 5, cusp_web},
      {3, "Fermat-cubic dual web certificate", 10, fermat_web},
      {4, "cohomology ring suite n=2..4", 5, cohomology_suite},
      {5, "Bott number bridge, 200 tuples", 30, bott_bridge},
      {6, "caustic-class certificate, 200 tuples", 30, caustic_certificate_suite},
      {7, "covariance and round trip, n=2 corpus", 60, covariance_suite},
      {8, "ideal engine vs Macaulay oracle, 50 ideals", 60, ideal_oracle},
      {9, "transition formulas and composition", 5, transition_suite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      std::cout << "FAIL " << c.id << " " << c.name << ": harness error: " << e.what() << "\n";
      return 2;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s";
    }
    failed += o.pass ? 0 : 1;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " [" << t.str() << " s]";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return strict && failed > 0 ? 1 : 0;
}
