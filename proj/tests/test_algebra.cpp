#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace dicritical;
using dicritical::testing::poly;

namespace {

const std::vector<std::string> kNames{"x", "y", "z"};

Polynomial random_poly(Rng& rng, int terms, int max_deg) {
  Polynomial p(3);
  for (int t = 0; t < terms; ++t) {
    Exponent e(3);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.integer(0, max_deg));
    p.add_term(e, rng.rational());
  }
  return p;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial p = poly("x + y"), q = poly("x - y");
  EXPECT_EQ((p * q).to_string(kNames), poly("x^2 - y^2").to_string(kNames));
  EXPECT_EQ(poly("1 + z").to_string(kNames), "1 + z");
  EXPECT_EQ(poly("3/2 y*z - x^2 + 1").to_string(kNames), "1 - x^2 + 3/2 y*z");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.pow(3), p * p * p);
}

TEST(Polynomial, OrdersAndContent) {
  const Polynomial p = poly("x^2*z^3 + x^3*z^2*y");
  EXPECT_EQ(p.order_in(0), 2U);
  EXPECT_EQ(p.order_in(2), 2U);
  EXPECT_EQ(p.degree_in(1), 1U);
  EXPECT_EQ(p.monomial_content(), (Exponent{2, 0, 2}));
  EXPECT_EQ(p.divide_monomial({2, 0, 2}), poly("z + x*y"));
}

TEST(Polynomial, Substitution) {
  EXPECT_EQ(poly("x*z - y^2").substitute(0, poly("x + y^2")), poly("x*z + y^2*z - y^2"));
  EXPECT_EQ(poly("x + y").evaluate(1, Rational(2)), poly("x + 2"));
}

TEST(Parser, RoundTripsPrintedForm) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = random_poly(rng, 5, 3);
    EXPECT_EQ(parse_polynomial(p.to_string(kNames), kNames), p);
  }
}

TEST(Parser, AcceptsCommonNotation) {
  EXPECT_EQ(poly("2(x + y)^2"), poly("2*x^2 + 4*x*y + 2*y^2"));
  EXPECT_EQ(poly("-x/2 + 1/3"), poly("1/3 - 1/2 x"));
  EXPECT_THROW(poly("x / y"), InputError);
  EXPECT_THROW(poly("w + 1"), InputError);
  EXPECT_THROW(poly("(x + 1"), InputError);
}

TEST(Gcd, CommonFactorFound) {
  const Polynomial a = poly("(x + y)*(x - z^2)"), b = poly("(x + y)*(y + z^2 + 1)");
  EXPECT_EQ(polynomial_gcd(a, b), poly("x + y"));
  EXPECT_EQ(polynomial_gcd(poly("x^2*y"), poly("x*y^3")), poly("x*y"));
}

TEST(Gcd, CoprimeInputsCertified) {
  EXPECT_TRUE(coprime_certificate(poly("x + y + z"), poly("x - y + z^2")));
  EXPECT_FALSE(coprime_certificate(poly("(x + y)*z"), poly("(x + y)*y")));
}

TEST(Gcd, RandomProductsRecoverFactor) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const Polynomial g = random_poly(rng, 3, 2) + poly("x");
    const Polynomial a = g * random_poly(rng, 3, 2), b = g * random_poly(rng, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    const Polynomial h = polynomial_gcd(a, b);
    EXPECT_NO_THROW(divide_exact(h, g));
    EXPECT_NO_THROW(divide_exact(a, h));
    EXPECT_NO_THROW(divide_exact(b, h));
  }
}

TEST(RationalFunction, ReducesAndNormalizes) {
  const RationalFunction r(poly("(x + 1)*(y - 2)"), poly("(x + 1)*(3 - 3*z)"));
  EXPECT_EQ(r.to_string(kNames), "(-2/3 + 1/3 y)/(1 - z)");
  EXPECT_EQ(RationalFunction(poly("2*x"), poly("4*x")), RationalFunction::constant(3, Rational(1, 2)));
}

TEST(RationalFunction, MobiusStaysReduced) {
  const RationalFunction h(poly("x + y"), poly("x - z"));
  const RationalFunction g = h.mobius(2, -3);
  EXPECT_EQ(g, RationalFunction(poly("x + y - 2*(x - z)"), poly("x + y + 3*(x - z)")));
  EXPECT_THROW(h.mobius(1, 1), InputError);
}

TEST(Rng, DeterministicStreams) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  Rng s1 = Rng(42).stream(1), s2 = Rng(42).stream(2);
  EXPECT_NE(s1.next(), s2.next());
  Rng r(9);
  for (int i = 0; i < 200; ++i) {
    const Rational q = r.rational();
    EXPECT_NE(q, 0);
    EXPECT_LE(abs(q.get_num()), 50);
    EXPECT_LE(q.get_den(), 9);
  }
}

TEST(LinearForm, EvaluationAndPrinting) {
  LinearForm f = LinearForm(Rational(5)) + LinearForm::unknown(4) * Rational(3, 2);
  EXPECT_EQ(f.to_string(true), "5 + 3/2 k");
  EXPECT_EQ(f.evaluate_uniform(BigInt(4)), Rational(11));
  EXPECT_TRUE(f.all_coefficients_positive());
}

TEST(Matrix, BareissAndLeftSolve) {
  const IntMatrix a{{1, 1, 2}, {1, 2, 3}, {1, 2, 4}};
  EXPECT_EQ(bareiss_determinant(a), 1);
  EXPECT_EQ(leading_principal_minors(a), (IntVector{1, 1, 1}));
  auto r = solve_left_integral(a, IntVector{1, 0, 0});
  ASSERT_TRUE(r);
  EXPECT_EQ(row_times(*r, a), (IntVector{1, 0, 0}));
  EXPECT_FALSE(solve_left_integral(IntMatrix{{2}}, IntVector{1}));
}
