// Chart-level values. Orders and restrictions marked "oracle" were computed
// independently with sympy (tests/oracle/symbolic_oracle.py).

#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace dicritical;
using dicritical::testing::fixture;
using dicritical::testing::forced_thm4;
using dicritical::testing::poly;

namespace {

IntVector orders(const Polynomial& p, const ChartTower& tower) {
  IntVector out;
  const RationalFunction h(p);
  for (std::size_t i = 1; i <= tower.blowups(); ++i) out.push_back(divisor_order(h, tower, i));
  return out;
}

struct Profile {
  bool dicritical;
  std::optional<long> degree;
};

Profile profile(const RationalFunction& h, const Scenario& sc, std::size_t i, std::uint64_t seed = 1) {
  DivisorRow row = inspect_divisor(h, sc, i, Rng(seed), 8);
  return {row.dicritical, row.degree};
}

}  // namespace

TEST(ChartTower, RejectsMalformedSteps) {
  EXPECT_THROW(ChartTower({"x", "y"}, {BlowupStep{{0, 1}, 2}}), InputError);
  EXPECT_THROW(ChartTower({"x", "y"}, {BlowupStep{{0}, 0}}), InputError);
}

TEST(ChartTower, VisibilityAfterLineBlowup) {
  const auto tw = *fixture("ex1-pi").tower;
  // E_2 lives on x; the third blow-up (chart y) keeps E_1 = {z = 0} visible.
  const auto& vis = tw.visible_after(tw.steps().size());
  EXPECT_EQ(vis.at(3), 1U);
  EXPECT_EQ(vis.at(2), 0U);
  EXPECT_EQ(vis.at(1), 2U);
}

TEST(Orders, Ex42Oracle) {
  const auto tw = *fixture("ex-4.2").tower;
  EXPECT_EQ(orders(poly("x + y + z"), tw), (IntVector{1, 1, 2}));
  EXPECT_EQ(orders(poly("x + y"), tw), (IntVector{1, 2, 3}));
  EXPECT_EQ(orders(poly("x - z^2"), tw), (IntVector{1, 2, 4}));
  EXPECT_EQ(orders(poly("x^2 + y*z^2"), tw), (IntVector{2, 4, 7}));
  EXPECT_EQ(orders(poly("x^2*z + y^3"), tw), (IntVector{3, 5, 9}));
}

TEST(Orders, MatchValuationMatrixRows) {
  // Curvette equations must realize the rows of A on every fixture tower.
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    const IntMatrix a = valuation_matrix(sc.descriptor).a;
    for (std::size_t j = 1; j <= sc.descriptor.m; ++j) {
      const IntVector ord = orders(sc.equations.curvette(j, 0), *sc.tower);
      for (std::size_t i = 1; i <= sc.descriptor.m; ++i) EXPECT_EQ(ord[i - 1], a(j - 1, i - 1)) << name;
    }
  }
}

TEST(Orders, Ex45Oracle) {
  const auto sc = fixture("ex-4.5");
  EXPECT_EQ(orders(poly("x*z + y^2"), *sc.tower), (IntVector{2, 3, 6, 7}));
  Prop3Request r;
  r.s = 3;
  r.ell = {1, 1};
  auto [f, g] = build_prop3_parts(prop3_solve(sc.descriptor, r), sc.equations);
  EXPECT_EQ(orders(f, *sc.tower), (IntVector{7, 12, 20, 20}));
  EXPECT_EQ(orders(g, *sc.tower), (IntVector{6, 11, 20, 20}));
}

TEST(Orders, ConicThroughShear) {
  EXPECT_EQ(orders(poly("x*z - y^2"), *fixture("ex-4.4").tower), (IntVector{2, 3}));
}

TEST(Orders, ChartIndependence) {
  // Random products of the fixture equations: every chart of every blow-up agrees.
  Rng rng(31);
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    std::vector<Polynomial> pool;
    for (const auto& [i, list] : sc.equations.curvettes) pool.insert(pool.end(), list.begin(), list.end());
    for (int t = 0; t < 4; ++t) {
      Polynomial num = Polynomial::constant(3, 1), den = num;
      for (const auto& p : pool) {
        long e = rng.integer(-2, 2);
        if (e > 0) num *= p.pow(e);
        if (e < 0) den *= p.pow(-e);
      }
      const RationalFunction h(num, den);
      for (std::size_t i = 1; i <= sc.descriptor.m; ++i) {
        auto all = divisor_orders_all_charts(h, *sc.tower, i);
        for (const auto& c : all) EXPECT_EQ(c.order, all.front().order) << name << " E_" << i << " " << c.chart;
      }
    }
  }
}

TEST(Pullback, IsARingMap) {
  const auto tw = *fixture("ex-4.5").tower;
  const Polynomial p = poly("x + 2*y - z^2"), q = poly("x*y + 3");
  const std::size_t n = tw.steps().size();
  EXPECT_EQ(tw.pullback(p * q, n), tw.pullback(p, n) * tw.pullback(q, n));
  EXPECT_EQ(tw.pullback(p + q, n), tw.pullback(p, n) + tw.pullback(q, n));
}

TEST(Pullback, CancellingShearsAreInvisible) {
  const auto base = *fixture("ex-4.4").tower;
  std::vector<TowerStep> steps = base.steps();
  steps.push_back(ShearStep{0, poly("y^2 + 3*z")});
  steps.push_back(ShearStep{0, poly("-y^2 - 3*z")});
  const ChartTower padded(base.names(), steps);
  const RationalFunction h(poly("x + y + z"), poly("x^2 + y*z^2"));
  for (std::size_t i = 1; i <= 2; ++i) EXPECT_EQ(divisor_order(h, padded, i), divisor_order(h, base, i));
  EXPECT_EQ(padded.pullback(h), base.pullback(h));
}

TEST(Pullback, ShearMovesConicToLine) {
  // After the shear x <- x + y^2 the strict transform of the conic is x = 0.
  const auto tw = *fixture("ex-4.4").tower;
  EXPECT_EQ(tw.pullback(poly("x*z - y^2"), 2), poly("x*z^2"));
}

TEST(Restriction, Ex42Oracle) {
  const auto sc = fixture("ex-4.2");
  const RationalFunction h = build_candidate(sc, solve(sc));
  const Restriction r = restrict_to(h, *sc.tower, 3);
  EXPECT_EQ(r.order, 0);
  EXPECT_EQ(r.value, RationalFunction(poly("1 + z"), poly("1 - z")));
  EXPECT_EQ(r.value.to_string(sc.tower->names()), "(1 + z)/(1 - z)");
  Rng rng(1);
  EXPECT_EQ(dicritical_degree(r, default_line_class(*sc.tower, 3), rng).degree, 1);
}

TEST(Restriction, ConstantValuesOnNonDicriticals) {
  const auto sc = fixture("ex-4.5");
  const RationalFunction h = build_candidate(sc, solve(sc));
  EXPECT_EQ(dicritical_status(h, *sc.tower, 1).value, "0");
  const auto e3 = dicritical_status(h, *sc.tower, 3);
  EXPECT_TRUE(e3.dicritical);
}

TEST(Restriction, OutsideWindowOracle) {
  // k = 5, l = 20: N = (1, 1, 0, 0) and the restriction to E_4 depends on z only.
  const auto sc = fixture("ex-4.5");
  const auto c = forced_thm4(sc, {{4, BigInt(5)}}, 20);
  const RationalFunction h = build_thm4(c, sc.equations);
  IntVector sym;
  for (std::size_t i = 1; i <= 4; ++i) sym.push_back(divisor_order(h, *sc.tower, i));
  EXPECT_EQ(sym, (IntVector{1, 1, 0, 0}));
  const Restriction r = restrict_to(h, *sc.tower, 4);
  EXPECT_FALSE(r.value.is_constant());
  for (std::size_t v : {0U, 1U}) {
    EXPECT_FALSE(r.value.numerator().depends_on(v));
    EXPECT_FALSE(r.value.denominator().depends_on(v));
  }
  EXPECT_EQ(profile(h, sc, 4).degree, 0);
}

TEST(Restriction, BoundaryChoiceOracle) {
  // k = 1, l = 4 on the conic tower: both orders vanish and E_2 moves with the fiber.
  const auto sc = fixture("ex-4.4");
  const RationalFunction h = build_thm4(forced_thm4(sc, {{2, BigInt(1)}}, 4), sc.equations);
  EXPECT_EQ(divisor_order(h, *sc.tower, 1), 0);
  EXPECT_EQ(divisor_order(h, *sc.tower, 2), 0);
  const Restriction r = restrict_to(h, *sc.tower, 2);
  EXPECT_TRUE(r.value.numerator().depends_on(0) || r.value.denominator().depends_on(0));
}

TEST(Degree, TemplatesAreChecked) {
  const auto tw = *fixture("ex-4.2").tower;
  LineClassSpec bad{3, {LineSlot::line, LineSlot::line, LineSlot::generic}};
  EXPECT_THROW(check_line_class(tw, bad), InputError);
  LineClassSpec flat{3, {LineSlot::zero, LineSlot::generic, LineSlot::generic}};
  EXPECT_THROW(check_line_class(tw, flat), InputError);
}

TEST(Degree, HigherDegreeFromPowers) {
  // h' with d = 3 on the ex-4.2 data has degree 3 on E_3.
  auto sc = fixture("ex-4.2");
  Prop3Request r;
  r.s = 3;
  r.d = 3;
  const RationalFunction h = build_prop3(prop3_solve(sc.descriptor, r), sc.equations);
  const auto p = profile(h, sc, 3);
  EXPECT_TRUE(p.dicritical);
  EXPECT_EQ(p.degree, 3);
}

TEST(Mobius, PreservesStatusAndDegree) {
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    const RationalFunction h = build_candidate(sc, solve(sc));
    for (std::uint64_t seed : {101U, 202U}) {
      Rng rng(seed);
      const MobiusConstants c = choose_mobius_constants(h, *sc.tower, rng);
      const RationalFunction g = h.mobius(c.a, c.b);
      for (std::size_t i = 1; i <= sc.descriptor.m; ++i) {
        const auto before = profile(h, sc, i), after = profile(g, sc, i);
        EXPECT_EQ(before.dicritical, after.dicritical) << name << " E_" << i;
        EXPECT_EQ(before.degree, after.degree) << name << " E_" << i;
      }
    }
  }
}

TEST(Product, DegreeZeroFactorKeepsTheOtherDegree) {
  // On the conic tower h1 = L'/L'' is dicritical of degree 0 on E_2 (it factors
  // through the conic) and h2 (k = 1, l = 4) is dicritical of positive degree there.
  const auto sc = fixture("ex-4.4");
  const RationalFunction h1(poly("2*x - y + z"), poly("x + y - 2*z"));
  const RationalFunction h2 = build_thm4(forced_thm4(sc, {{2, BigInt(1)}}, 4), sc.equations);
  const auto p1 = profile(h1, sc, 2), p2 = profile(h2, sc, 2), p = profile(h1 * h2, sc, 2);
  ASSERT_TRUE(p1.dicritical && p2.dicritical);
  EXPECT_EQ(p1.degree, 0);
  ASSERT_GT(*p2.degree, 0);
  EXPECT_TRUE(p.dicritical);
  EXPECT_EQ(p.degree, p2.degree);
}

TEST(Product, DegreeWithinSumAndDifference) {
  const auto sc = fixture("ex-4.4");
  const RationalFunction h1(poly("2*x - y + z"), poly("x + y - 2*z"));
  const RationalFunction h2 = build_candidate(sc, solve(sc));
  const auto p1 = profile(h1, sc, 1), p2 = profile(h2, sc, 1), p = profile(h1 * h2, sc, 1);
  ASSERT_TRUE(p1.dicritical && p2.dicritical);
  const long lo = std::abs(*p2.degree - *p1.degree), hi = *p1.degree + *p2.degree;
  // With equal degrees the product may also stop being dicritical.
  if (p.dicritical) {
    EXPECT_GE(*p.degree, lo);
    EXPECT_LE(*p.degree, hi);
  } else {
    EXPECT_EQ(*p1.degree, *p2.degree);
  }
}
