#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace dicritical;
using dicritical::testing::fixture;
using dicritical::testing::random_descriptor;

namespace {

IntMatrix matrix_of(const std::string& name) { return valuation_matrix(fixture(name).descriptor).a; }

}  // namespace

TEST(ValuationMatrix, PiFixture) {
  EXPECT_EQ(matrix_of("ex1-pi"), (IntMatrix{{1, 1, 1}, {1, 2, 1}, {1, 2, 2}}));
}

TEST(ValuationMatrix, PiBarFixture) {
  EXPECT_EQ(matrix_of("ex1-pibar"), (IntMatrix{{1, 1, 1}, {1, 2, 2}, {2, 3, 4}}));
}

TEST(ValuationMatrix, StackedWithSpecialRows) {
  const auto d = fixture("ex-4.2").descriptor;
  const IntMatrix a = valuation_matrix(d).a;
  const IntMatrix b = special_matrix(d, 3, {1, 1});
  EXPECT_EQ(a.stacked(b), (IntMatrix{{1, 1, 2}, {1, 2, 3}, {1, 2, 4}, {2, 4, 7}, {3, 5, 9}}));
}

TEST(ValuationMatrix, DiagonalRelation) {
  // a_kk = sum_{j in D_k} a_kj + 1 for every fixture.
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto d = fixture(std::string(name)).descriptor;
    const IntMatrix a = valuation_matrix(d).a;
    for (std::size_t k = 1; k <= d.m; ++k) {
      BigInt sum = 1;
      for (std::size_t j : d.containing(k)) sum += a(k - 1, j - 1);
      EXPECT_EQ(a(k - 1, k - 1), sum) << name << " k=" << k;
    }
  }
}

TEST(ValuationMatrix, RandomDescriptorsAreUnimodular) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_descriptor(rng);
    ASSERT_TRUE(validate_descriptor(d).ok()) << validate_descriptor(d).summary();
    EXPECT_TRUE(all_ones(principal_minors_unimodular(valuation_matrix(d))));
  }
}

TEST(PullbackOrders, IsLinear) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto d = random_descriptor(rng);
    IntVector u(d.m), v(d.m), w(d.m);
    const BigInt a = rng.integer(-5, 5), b = rng.integer(-5, 5);
    for (std::size_t i = 0; i < d.m; ++i) {
      u[i] = rng.integer(-4, 4);
      v[i] = rng.integer(-4, 4);
      w[i] = a * u[i] + b * v[i];
    }
    const IntVector pu = pullback_orders(d, u), pv = pullback_orders(d, v), pw = pullback_orders(d, w);
    for (std::size_t i = 0; i < d.m; ++i) EXPECT_EQ(pw[i], a * pu[i] + b * pv[i]);
  }
}

TEST(SpecialMatrix, ColumnRelation) {
  // b_{js} = sum_{i in D_s} b_{ji} + l_j
  const auto d = fixture("ex-4.2").descriptor;
  for (BigInt l1 = 1; l1 <= 4; ++l1)
    for (BigInt l2 = 1; l2 <= 4; ++l2) {
      const IntMatrix b = special_matrix(d, 3, {l1, l2});
      EXPECT_EQ(b(0, 2), b(0, 0) + b(0, 1) + l1);
      EXPECT_EQ(b(1, 2), b(1, 0) + b(1, 1) + l2);
    }
}

TEST(SpecialMatrix, RejectsEmptyContainment) {
  const auto d = fixture("ex-4.2").descriptor;
  EXPECT_THROW(special_matrix(d, 1, {}), InputError);
}

TEST(Validation, ReportsEmptyContainment) {
  auto d = fixture("ex1-pi").descriptor;
  d.centers[1].containing.clear();
  const auto rep = validate_descriptor(d);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().code, "D_empty");
  EXPECT_EQ(rep.violations.front().index, 2U);
  EXPECT_THROW(valuation_matrix(d), InputError);
}

TEST(Validation, RejectsBadCurvetteDiagonal) {
  auto d = fixture("ex1-pi").descriptor;
  d.centers[2].curvette_row[2] = 2;
  EXPECT_FALSE(validate_descriptor(d).ok());
}

TEST(Validation, RejectsInconsistentLaterCurvetteTable) {
  auto d = fixture("ex-4.5").descriptor;
  d.thm4->later_curvette = {{4, 4, 2}};
  const auto rep = validate_descriptor(d);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().code, "muZ_inconsistent");
}

TEST(LowSets, Ex45) {
  const auto d = fixture("ex-4.5").descriptor;
  const LowSet low = low_sets(d, 3);
  EXPECT_EQ(low.at(4), (IndexSet{3}));
  EXPECT_FALSE(low.below_target(4));
}

TEST(LowSets, ClosureThroughLaterCenters) {
  ModificationDescriptor d;
  d.n = 3;
  d.m = 4;
  d.centers = {{0, {}, {1}}, {0, {1}, {}}, {1, {2}, {}}, {1, {3}, {}}};
  for (std::size_t j = 2; j <= 4; ++j) d.centers[j - 1].curvette_row = default_curvette_row(d, j);
  const LowSet low = low_sets(d, 1);
  EXPECT_EQ(low.at(2), (IndexSet{1}));
  EXPECT_EQ(low.at(4), (IndexSet{1}));
  EXPECT_FALSE(low.below_target(4));
  const LowSet low2 = low_sets(d, 2);
  EXPECT_EQ(low2.at(4), (IndexSet{2}));
}

TEST(CurvetteRows, DefaultFollowsAncestry) {
  const auto d = fixture("ex1-pibar").descriptor;
  EXPECT_EQ(default_curvette_row(d, 3), (IntVector{1, 1, 1}));
  // The fixture's explicit table differs from the default generator.
  EXPECT_EQ(d.center(3).curvette_row, (IntVector{2, 1, 1}));
}
