#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "weave/errors.hpp"
#include "weave/ideal.hpp"
#include "weave/poly_ops.hpp"
#include "weave/poly_parse.hpp"

using namespace weave;

namespace {

const VarTablePtr kChart2 = VarTable::chart(2);

MultiPoly P(const char* text) { return parse_poly(text, kChart2); }

std::vector<MultiPoly> Ps(std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(P(t));
  return out;
}

/// Checks the reduced-basis invariants directly.
void expect_reduced(const IdealBasis& b) {
  const auto& g = b.generators();
  const MonomialOrder& ord = b.order();
  for (std::size_t a = 0; a < g.size(); ++a) {
    EXPECT_EQ(leading_coefficient(g[a], ord), 1);
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (a == c) continue;
      const Exponents la = leading_exponents(g[a], ord);
      for (const auto& [e, coeff] : g[c].terms()) {
        bool divisible = true;
        for (std::size_t k = 0; k < e.size(); ++k) divisible = divisible && la[k] <= e[k];
        EXPECT_FALSE(divisible) << g[a].to_string() << " divides a term of " << g[c].to_string();
      }
    }
    for (std::size_t c = a + 1; c < g.size(); ++c) {
      EXPECT_TRUE(normal_form(s_polynomial(g[a], g[c], ord), b).is_zero());
    }
  }
}

}  // namespace

TEST(MonomialOrder, Kinds) {
  const auto grevlex = MonomialOrder::grevlex();
  const auto lex = MonomialOrder::lex();
  // x1*p1 vs x2^2 (variables x1, x2, p1).
  EXPECT_GT(grevlex.compare({0, 2, 0}, {1, 0, 1}), 0);
  EXPECT_GT(lex.compare({1, 0, 1}, {0, 2, 0}), 0);
  const auto block = MonomialOrder::block({2}, 3);
  // Any p1 power beats pure x monomials.
  EXPECT_GT(block.compare({0, 0, 1}, {5, 5, 0}), 0);
  EXPECT_GT(block.compare({0, 2, 0}, {1, 0, 0}), 0);
  EXPECT_THROW(MonomialOrder::block({3}, 3), UsageError);
}

TEST(NormalForm, Examples) {
  const IdealBasis single(kChart2, Ps({"p1^2 - x1"}), MonomialOrder::grevlex(), false);
  EXPECT_EQ(normal_form(P("p1^2"), single), P("x1"));
  EXPECT_TRUE(normal_form(P("0"), single).is_zero());
  const IdealBasis b = buchberger(Ps({"p1^2 - x1", "2*p1"}));
  EXPECT_TRUE(normal_form(P("x1"), b).is_zero());
  EXPECT_EQ(normal_form(P("-1"), b), P("-1"));
}

TEST(Buchberger, Examples) {
  EXPECT_EQ(buchberger(Ps({"x1", "p1"})).generators(), Ps({"p1", "x1"}));
  EXPECT_EQ(buchberger(Ps({"p1^2 - x1", "2*p1"})).generators(), Ps({"p1", "x1"}));
  EXPECT_EQ(buchberger(Ps({"1"})).generators(), Ps({"1"}));
  EXPECT_TRUE(buchberger(Ps({"0", "0"})).is_zero_ideal());
  EXPECT_TRUE(buchberger(Ps({"x1*p1 - 3", "x1 - 2", "p1"})).is_unit());
}

TEST(Buchberger, ReducedInvariants) {
  const IdealBasis b = buchberger(Ps({"x1^2*p1 - x2", "x1*p1^2 - x1", "x2^2 - p1"}));
  EXPECT_TRUE(b.reduced());
  expect_reduced(b);
}

TEST(Buchberger, CapExceededIsLoud) {
  IdealOptions opts;
  opts.pair_cap = 1;
  EXPECT_THROW(buchberger(Ps({"x1^2*p1 - x2", "x1*p1^2 - x1", "x2^2 - p1"}),
                          MonomialOrder::grevlex(), opts),
               CapExceeded);
}

TEST(Buchberger, DeterministicGivenInput) {
  const auto gens = Ps({"x1^3 - x2*p1", "x2^2 - x1*p1", "p1^2 - x1 + 1"});
  const auto a = buchberger(gens).generators();
  const auto b = buchberger(gens).generators();
  EXPECT_EQ(a, b);
}

TEST(IdealMember, Examples) {
  EXPECT_TRUE(ideal_member(P("p1"), Ps({"p1^2 - x1", "2*p1"})));
  EXPECT_FALSE(ideal_member(P("1"), Ps({"x1", "p1"})));
  EXPECT_FALSE(ideal_member(P("-1"), Ps({"p1^2 - x1", "2*p1"})));
}

TEST(TrivialIdeal, Examples) {
  EXPECT_TRUE(is_trivial_ideal(Ps({"x1", "1 - x1"})));
  EXPECT_FALSE(is_trivial_ideal(Ps({"x1"})));
  EXPECT_TRUE(is_trivial_ideal(Ps({"p1^2 - x1", "-1"})));
}

TEST(Eliminate, Examples) {
  EXPECT_EQ(eliminate(Ps({"p1^2 - x1", "2*p1"}), VarGroup::ChartP), Ps({"x1"}));
  EXPECT_EQ(eliminate(Ps({"x1 - 1"}), VarGroup::ChartP), Ps({"x1 - 1"}));
  const MultiPoly f = P("(x2 - p1*x1)^2 - p1^2 - 1");
  const auto gens = std::vector<MultiPoly>{f, partial_derivative(f, "p1")};
  const auto out = eliminate(gens, VarGroup::ChartP);
  ASSERT_EQ(out.size(), 1u);
  const MultiPoly circle = P("x1^2 + x2^2 - 1");
  EXPECT_EQ(out[0] * circle.leading_coefficient(), circle * out[0].leading_coefficient());
  // Agrees with the resultant once its leading-coefficient factor is removed.
  const MultiPoly r = resultant(f, partial_derivative(f, "p1"), kChart2->index("p1"));
  const auto disc = divide_exact(r, P("x1^2 - 1"));
  ASSERT_TRUE(disc.has_value());
  EXPECT_EQ(out[0] * disc->leading_coefficient(), *disc * out[0].leading_coefficient());
}

TEST(IdealProperty, NormalFormIdempotentAndInIdeal) {
  check::Gen gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<MultiPoly> gens{gen.nonzero_poly(kChart2, 2, 3), gen.nonzero_poly(kChart2, 2, 3)};
    const IdealBasis b = buchberger(gens);
    expect_reduced(b);
    const MultiPoly f = gen.poly(kChart2, 3, 4);
    const MultiPoly r = normal_form(f, b);
    ASSERT_EQ(normal_form(r, b), r);
    ASSERT_TRUE(ideal_member(f - r, gens));
    for (const MultiPoly& g : gens) ASSERT_TRUE(normal_form(g, b).is_zero());
  }
}

TEST(IdealProperty, AgreesWithMacaulayOracle) {
  check::Gen gen(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int count = gen.integer(2, 3);
    std::vector<MultiPoly> gens;
    for (int k = 0; k < count; ++k) gens.push_back(gen.nonzero_poly(kChart2, 3, 3));
    // A known member and a random candidate.
    MultiPoly member(kChart2);
    for (const MultiPoly& g : gens) member += g * gen.poly(kChart2, 1, 2);
    const MultiPoly candidate = gen.poly(kChart2, 2, 3);
    for (const MultiPoly& f : {member, candidate}) {
      const bool engine = ideal_member(f, gens);
      const bool oracle = check::macaulay_member(f, gens, std::max(f.total_degree(), 3) + 3);
      ASSERT_EQ(engine, oracle) << f.to_string();
    }
  }
}

TEST(IdealProperty, EliminationOutputInIdeal) {
  check::Gen gen(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultiPoly> gens{gen.nonzero_poly(kChart2, 2, 3) + P("p1^2"),
                                gen.nonzero_poly(kChart2, 2, 3) + P("p1")};
    const auto out = eliminate(gens, VarGroup::ChartP);
    for (const MultiPoly& g : out) {
      ASSERT_FALSE(g.depends_on(kChart2->index("p1")));
      ASSERT_TRUE(ideal_member(g, gens));
    }
  }
}
