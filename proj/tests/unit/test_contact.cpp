#include <gtest/gtest.h>

#include "generators.hpp"
#include "weave/contact.hpp"
#include "weave/errors.hpp"
#include "weave/poly_parse.hpp"

using namespace weave;

namespace {

MultiPoly H(int n, const char* text) { return parse_poly(text, VarTable::bihomogeneous(n)); }
MultiPoly F(int n, const char* text) { return parse_poly(text, VarTable::chart(n)); }
RationalFunction R(int n, const char* text) { return RationalFunction(F(n, text)); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

const BiHomogPde& conic() {
  static const BiHomogPde s(H(2, "u1^2 + u2^2 - u0^2"));
  return s;
}

const BiHomogPde& fermat() {
  static const BiHomogPde s(H(2, "u0^3 + u1^3 + u2^3"));
  return s;
}

/// (x', p') computed from homogeneous coordinates, independent of the Jacobian path.
std::vector<Rational> homogeneous_transport(const Chart& c1, const Chart& c2, int n,
                                            const std::vector<Rational>& pt) {
  std::vector<Rational> X(static_cast<std::size_t>(n + 1)), u(static_cast<std::size_t>(n + 1));
  const auto xs1 = c1.x_indices(n);
  const auto ps1 = c1.p_indices(n);
  X[static_cast<std::size_t>(c1.i)] = 1;
  for (int k = 0; k < n; ++k) X[static_cast<std::size_t>(xs1[static_cast<std::size_t>(k)])] = pt[static_cast<std::size_t>(k)];
  u[static_cast<std::size_t>(c1.j)] = -1;
  Rational ui = pt[static_cast<std::size_t>(n - 1)];
  for (int k = 0; k < n - 1; ++k) {
    const Rational p = pt[static_cast<std::size_t>(n + k)];
    u[static_cast<std::size_t>(ps1[static_cast<std::size_t>(k)])] = p;
    ui -= p * pt[static_cast<std::size_t>(k)];
  }
  u[static_cast<std::size_t>(c1.i)] = ui;
  std::vector<Rational> out;
  for (int idx : c2.x_indices(n)) out.push_back(X[static_cast<std::size_t>(idx)] / X[static_cast<std::size_t>(c2.i)]);
  for (int idx : c2.p_indices(n)) out.push_back(-u[static_cast<std::size_t>(idx)] / u[static_cast<std::size_t>(c2.j)]);
  return out;
}

/// Random point of c1 lying in the overlap with every chart in `others`.
std::optional<std::vector<Rational>> overlap_point(check::Gen& gen, const Chart& c1,
                                                   const std::vector<Chart>& others, int n) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto pt = gen.point(static_cast<std::size_t>(2 * n - 1), 6);
    bool ok = true;
    for (const Chart& c2 : others) {
      const auto t = transition(c1, c2, n);
      try {
        transport_point(t, pt);
      } catch (const UsageError&) {
        ok = false;
      }
    }
    if (ok) return pt;
  }
  return std::nullopt;
}

}  // namespace

TEST(Chart, AtlasAndIndices) {
  EXPECT_EQ(standard_atlas(2).size(), 6u);
  EXPECT_EQ(standard_atlas(4).size(), 20u);
  const Chart c{1, 3};
  EXPECT_EQ(c.x_indices(3), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(c.p_indices(3), (std::vector<int>{0, 2}));
  EXPECT_THROW(validate_chart({1, 1}, 2), UsageError);
  EXPECT_THROW(validate_chart({0, 3}, 2), UsageError);
}

TEST(BiHomogPde, Validation) {
  EXPECT_EQ(conic().bidegree(), (Bidegree{0, 2}));
  EXPECT_THROW(BiHomogPde(H(2, "X0*u0 + X1*u1 + X2*u2")), InputError);
  EXPECT_THROW(BiHomogPde(H(2, "(X0*u0 + X1*u1 + X2*u2)*(u1 - X0*u2)")), InputError);
  EXPECT_THROW(BiHomogPde(H(2, "0")), InputError);
  EXPECT_THROW(BiHomogPde(H(2, "X0*u1^2 + X1*u0")), InputError);
  EXPECT_THROW(BiHomogPde(H(2, "X0^2 + X1*X2")), InputError);
  EXPECT_THROW(BiHomogPde(F(2, "p1")), InputError);
}

TEST(ChartForm, Examples) {
  EXPECT_EQ(chart_form(conic(), {0, 2}).F, F(2, "p1^2 + 1 - (x2 - p1*x1)^2"));
  EXPECT_EQ(chart_form(fermat(), {0, 2}).F, F(2, "(x2 - p1*x1)^3 + p1^3 - 1"));
  EXPECT_THROW(chart_form(conic(), {2, 2}), UsageError);
}

TEST(ChartForm, SatisfiesIncidenceInEveryChart) {
  for (int n = 1; n <= 4; ++n) {
    const MultiPoly l = incidence_form(VarTable::bihomogeneous(n));
    for (const Chart& c : standard_atlas(n)) EXPECT_TRUE(restrict_to_chart(l, c).is_zero()) << n;
  }
}

TEST(Rehomogenize, Examples) {
  const BiHomogPde back = rehomogenize(chart_form(conic(), {0, 2}));
  EXPECT_TRUE(proportional(back.H(), conic().H()));
  const BiHomogPde p1 = rehomogenize(raw_chart_form(2, {0, 2}, F(2, "p1")));
  EXPECT_EQ(p1.H(), H(2, "u1"));
  EXPECT_EQ(p1.bidegree(), (Bidegree{0, 1}));
  const ChartForm lin = raw_chart_form(2, {0, 2}, F(2, "x1 - p1"));
  const BiHomogPde h = rehomogenize(lin);
  EXPECT_EQ(h.bidegree(), (Bidegree{1, 1}));
  EXPECT_EQ(chart_form(h, {0, 2}).F, lin.F);
  EXPECT_EQ(h.H(), reduce_mod_incidence(h.H()));
}

TEST(Rehomogenize, DeclaredBidegree) {
  const auto cusp = raw_chart_form(2, {2, 0}, F(2, "p1^2 - x1"), Bidegree{1, 2});
  const BiHomogPde h = rehomogenize(cusp);
  EXPECT_EQ(h.bidegree(), (Bidegree{1, 2}));
  EXPECT_EQ(chart_form(h, {2, 0}).F, cusp.F);
  const auto too_small = raw_chart_form(2, {0, 2}, F(2, "p1^2 - x1"), Bidegree{0, 1});
  EXPECT_THROW(rehomogenize(too_small), InputError);
}

TEST(RehomogenizeProperty, RoundTripModuloIncidence) {
  check::Gen gen(51);
  const VarTablePtr bh = VarTable::bihomogeneous(2);
  int exact = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int delta = gen.integer(0, 2);
    const int d = gen.integer(1, 2);
    MultiPoly h = gen.bihomogeneous(bh, delta, d, 4);
    if (reduce_mod_incidence(h).is_zero()) continue;
    const BiHomogPde s(h);
    for (const Chart& c : standard_atlas(2)) {
      const BiHomogPde back = rehomogenize(chart_form(s, c));
      // back is H reduced mod incidence, up to a scalar and the powers of
      // X_i and u_j invisible in the chart.
      const Bidegree bd = back.bidegree();
      ASSERT_LE(bd.x, delta);
      ASSERT_LE(bd.u, d);
      Exponents shift(bh->size(), 0);
      shift[static_cast<std::size_t>(c.i)] = delta - bd.x;
      shift[static_cast<std::size_t>(3 + c.j)] = d - bd.u;
      const MultiPoly lifted = reduce_mod_incidence(back.H().mul_term(shift, 1));
      ASSERT_TRUE(proportional(lifted, reduce_mod_incidence(h))) << h.to_string();
      if (bd == s.bidegree()) ++exact;
    }
  }
  EXPECT_GT(exact, 0);
}

TEST(Transition, Identity) {
  const auto t = transition({0, 2}, {0, 2}, 2);
  EXPECT_EQ(t.p_map[0], R(2, "p1"));
  EXPECT_EQ(t.delta_M, R(2, "1"));
  EXPECT_EQ(t.K[0][0], R(2, "1"));
  EXPECT_EQ(t.K[0][1], R(2, "0"));
  EXPECT_EQ(t.K[1][1], R(2, "1"));
}

TEST(Transition, CoordinateSwap) {
  const auto t = transition({0, 2}, {0, 1}, 2);
  EXPECT_EQ(t.x_map[0], R(2, "x2"));
  EXPECT_EQ(t.x_map[1], R(2, "x1"));
  EXPECT_EQ(t.J[0][0], R(2, "0"));
  EXPECT_EQ(t.J[0][1], R(2, "1"));
  EXPECT_EQ(t.delta_M, R(2, "-1"));
  EXPECT_EQ(t.K[0][1], R(2, "-1"));
  EXPECT_EQ(t.K[1][0], R(2, "-1"));
  EXPECT_EQ(t.K[0][0], R(2, "0"));
  EXPECT_EQ(t.p_map[0], RationalFunction(F(2, "1"), F(2, "p1")));
}

TEST(Transition, AffineTranslationAndShear) {
  const auto tr = coordinate_change(2, {R(2, "x1 + 3"), R(2, "x2 - 1/2")});
  EXPECT_EQ(tr.p_map[0], R(2, "p1"));
  EXPECT_EQ(tr.delta_T, R(2, "1"));
  EXPECT_EQ(tr.delta_M, R(2, "1"));
  // x2' = x2 + 2 x1 turns slope p into p + 2.
  const auto sh = coordinate_change(2, {R(2, "x1"), R(2, "x2 + 2*x1")});
  EXPECT_EQ(sh.p_map[0], R(2, "p1 + 2"));
}

TEST(Transition, JacobianTimesK) {
  for (int n = 2; n <= 3; ++n) {
    for (const Chart& c1 : standard_atlas(n)) {
      for (const Chart& c2 : standard_atlas(n)) {
        const auto t = transition(c1, c2, n);
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            RationalFunction acc(F(n, "0"));
            for (int k = 0; k < n; ++k) acc = acc + t.J[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] * t.K[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)];
            ASSERT_EQ(acc, a == b ? t.delta_M : R(n, "0"));
          }
        }
      }
    }
  }
}

TEST(TransitionProperty, AdjugateFormulaMatchesHomogeneousCoordinates) {
  check::Gen gen(52);
  for (int n = 2; n <= 3; ++n) {
    for (const Chart& c1 : standard_atlas(n)) {
      for (const Chart& c2 : standard_atlas(n)) {
        const auto pt = overlap_point(gen, c1, {c2}, n);
        ASSERT_TRUE(pt.has_value());
        ASSERT_EQ(transport_point(transition(c1, c2, n), *pt), homogeneous_transport(c1, c2, n, *pt));
      }
    }
  }
}

TEST(TransitionProperty, CompositionCoherence) {
  check::Gen gen(53);
  const auto atlas = standard_atlas(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Chart c1 = atlas[static_cast<std::size_t>(gen.integer(0, 11))];
    const Chart c2 = atlas[static_cast<std::size_t>(gen.integer(0, 11))];
    const Chart c3 = atlas[static_cast<std::size_t>(gen.integer(0, 11))];
    const auto pt = overlap_point(gen, c1, {c2, c3}, 3);
    ASSERT_TRUE(pt.has_value());
    const auto mid = transport_point(transition(c1, c2, 3), *pt);
    std::vector<Rational> via;
    try {
      via = transport_point(transition(c2, c3, 3), mid);
    } catch (const UsageError&) {
      continue;
    }
    ASSERT_EQ(via, transport_point(transition(c1, c3, 3), *pt));
    // Going back recovers the starting point.
    ASSERT_EQ(transport_point(transition(c2, c1, 3), mid), *pt);
  }
}

TEST(TransportForm, ClearsDenominators) {
  const auto t = transition({0, 2}, {0, 1}, 2);
  const auto r = transport_form(t, F(2, "p1 - x1"));
  EXPECT_EQ(r.F, F(2, "1 - x2*p1"));
  EXPECT_EQ(r.cleared, F(2, "p1"));
}

TEST(Covariance, Examples) {
  EXPECT_TRUE(covariance_check(conic(), {0, 2}, {1, 2}));
  const auto same = covariance_details(chart_form(conic(), {0, 2}), chart_form(conic(), {0, 2}), 2);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(*same.ratio, R(2, "1"));
  EXPECT_FALSE(covariance_check(chart_form(conic(), {0, 2}), chart_form(fermat(), {1, 2}), 3));
  EXPECT_FALSE(covariance_check(chart_form(conic(), {0, 2}), chart_form(fermat(), {0, 2}), 3));
}

TEST(CovarianceProperty, AllChartPairs) {
  const std::vector<BiHomogPde> corpus{
      conic(), fermat(), BiHomogPde(H(2, "X0*u1 + X1*u0")), BiHomogPde(H(2, "X0^2*u1 + X1^2*u0")),
      BiHomogPde(H(2, "X0*u1^2 - X1*u2^2")), BiHomogPde(H(2, "X2^3*u0^2*u1 + X0*X1^2*u2^3 - X1^3*u1^3"))};
  for (const BiHomogPde& s : corpus) {
    for (const Chart& c1 : standard_atlas(2)) {
      for (const Chart& c2 : standard_atlas(2)) {
        const auto res = covariance_details(chart_form(s, c1), chart_form(s, c2), s.bidegree().u);
        ASSERT_TRUE(res.holds) << s.H().to_string() << " charts " << c1.label() << " -> " << c2.label();
      }
    }
  }
}

TEST(CovarianceProperty, ThreeDimensional) {
  const BiHomogPde s(H(3, "X0*u1^2 + X3*u2*u0 - X2*u3^2"));
  for (const Chart& c1 : standard_atlas(3)) {
    for (const Chart& c2 : standard_atlas(3)) ASSERT_TRUE(covariance_check(s, c1, c2));
  }
}

TEST(Dual, Examples) {
  const BiHomogPde s(H(2, "X0*u1 + X1*u0"));
  const BiHomogPde d = dual_pde(s);
  EXPECT_EQ(d.H(), H(2, "u0*X1 + u1*X0"));
  EXPECT_EQ(d.bidegree(), (Bidegree{1, 1}));
  EXPECT_THROW(dual_pde(conic()), UsageError);
  EXPECT_EQ(dual_pde(BiHomogPde(H(2, "X0^2*u1 + X1^2*u0"))).bidegree(), (Bidegree{1, 2}));
}

TEST(DualProperty, Involution) {
  check::Gen gen(54);
  const VarTablePtr bh = VarTable::bihomogeneous(3);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly h = gen.bihomogeneous(bh, gen.integer(1, 3), gen.integer(1, 3), 4);
    if (reduce_mod_incidence(h).is_zero()) continue;
    const BiHomogPde s(h);
    ASSERT_EQ(dual_pde(dual_pde(s)), s);
  }
}

TEST(AlgebraicPde, Examples) {
  EXPECT_TRUE(is_algebraic_pde(conic()));
  EXPECT_FALSE(is_algebraic_pde(BiHomogPde(H(2, "X0*u1^2 - X1*u2^2"))));
  EXPECT_TRUE(is_algebraic_pde(fermat()));
}
