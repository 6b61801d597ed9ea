#include "fpkit/exact_algebra.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace fpkit;

namespace {

Polynomial P(std::initializer_list<BigRational> c) { return Polynomial(c); }

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
  std::vector<BigRational> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return Polynomial(std::move(c));
}

// Cauchy product without truncation tricks, used as an oracle for series code.
TruncatedSeries naive_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= s.order(); ++k) {
    BigRational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    s[k] = acc;
  }
  return s;
}

}  // namespace

TEST(Rational, CanonicalAndExact) {
  EXPECT_EQ(make_rational(6, -4), BigRational(-3, 2));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_TRUE(is_integer(make_rational(8, 4)));
  EXPECT_FALSE(is_integer(BigRational(1, 3)));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  BigRational third(1, 3);
  EXPECT_EQ(third + third + third, 1);
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(P({1, -1}) * P({1, 1}), P({1, 0, -1}));
  EXPECT_EQ(Polynomial::one_minus_power(3) + Polynomial::monomial(1, 3), P({1}));
  EXPECT_EQ(Polynomial::one_minus_power(2) * Polynomial::one_minus_power(3), P({1, 0, -1, -1, 0, 1}));
}

TEST(Polynomial, ZeroHasDegreeMinusOne) {
  Polynomial z = P({1, 2}) - P({1, 2});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(P({0, 0, 0}).degree(), -1);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(P({1, -1}).to_string("y"), "1 - y");
  EXPECT_EQ(P({0, -1, 1}).to_string("y"), "-y + y^2");
  EXPECT_EQ(P({BigRational(1, 2), 0, 3}).to_string(), "1/2 + 3*t^2");
}

TEST(Polynomial, DivisionReconstructs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng, 8), b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(P({1}), Polynomial{}), std::domain_error);
  EXPECT_THROW(exact_quotient(P({1, 1}), P({0, 1})), std::logic_error);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(Polynomial::one_minus_power(2), Polynomial::one_minus_power(1)),
            Polynomial::one_minus_power(1).monic());
  EXPECT_EQ(gcd(P({1, -1}), P({1, 1})), P({1}));
  EXPECT_EQ(gcd(Polynomial::one_minus_power(6), Polynomial::one_minus_power(4)),
            Polynomial::one_minus_power(2).monic());
  EXPECT_THROW(gcd(Polynomial{}, Polynomial{}), std::invalid_argument);
  EXPECT_EQ(gcd(Polynomial{}, P({2, 4})), P({BigRational(1, 2), 1}));
}

// gcd(1 - t^a, 1 - t^b) = 1 - t^gcd(a,b) up to a unit.
TEST(Gcd, CyclotomicOracle) {
  for (std::size_t a = 1; a <= 12; ++a)
    for (std::size_t b = 1; b <= 12; ++b)
      EXPECT_EQ(gcd(Polynomial::one_minus_power(a), Polynomial::one_minus_power(b)),
                Polynomial::one_minus_power(std::gcd(a, b)).monic())
          << a << "," << b;
}

TEST(Gcd, DividesBothAndIsMonic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial c = random_poly(rng, 3);
    Polynomial a = random_poly(rng, 4) * c, b = random_poly(rng, 4) * c;
    if (a.is_zero() && b.is_zero()) continue;
    Polynomial g = gcd(a, b);
    EXPECT_EQ(g.leading(), 1);
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    if (!c.is_zero()) {
      EXPECT_TRUE(divmod(g, c.monic()).second.is_zero());
    }
  }
}

TEST(RationalFunction, Examples) {
  RationalFunction inv(P({1}), P({1, -1}));
  EXPECT_EQ(inv + RationalFunction(P({0, -1}), P({1, -1})), RationalFunction(1));
  // t/(t - 1) + 1/(1 - t) = (1 - t)/(1 - t)
  RationalFunction s = RationalFunction(P({0, 1}), P({-1, 1})) + inv;
  EXPECT_TRUE(s.is_constant());
  EXPECT_EQ(s, RationalFunction(1));

  RationalFunction a(P({1}), Polynomial::one_minus_power(2));
  RationalFunction b(P({1}), Polynomial::one_minus_power(3));
  Polynomial num = P({2, 0, -1, -1});
  Polynomial den = Polynomial::one_minus_power(2) * Polynomial::one_minus_power(3);
  EXPECT_EQ(a + b, RationalFunction(num, den));
  // 2 - t^2 - t^3 = (1 - t)(2 + 2t + t^2), so the reduced form is degree 2 over 4.
  EXPECT_EQ((a + b).denominator().degree(), 4);
  EXPECT_EQ((a + b).numerator(), P({-2, -2, -1}));
  EXPECT_EQ((a + b).denominator(), P({-1, -1, 0, 1, 1}));
}

TEST(RationalFunction, CanonicalForm) {
  RationalFunction r(P({2, -2}), P({4, 0, -4}));  // 2(1-t) / 4(1-t)(1+t)
  EXPECT_EQ(r.denominator(), P({1, 1}));
  EXPECT_EQ(r.numerator(), P({BigRational(1, 2)}));
  RationalFunction z(Polynomial{}, P({3, 7}));
  EXPECT_EQ(z.denominator(), P({1}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(RationalFunction(P({1}), Polynomial{}), std::domain_error);
  EXPECT_THROW(RationalFunction(P({1}), P({0, 1})).value_at_zero(), std::domain_error);
}

TEST(RationalFunction, SelfDifferenceIsZeroAndSumIsSymmetric) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial d1 = random_poly(rng, 4), d2 = random_poly(rng, 4);
    if (d1.is_zero() || d2.is_zero()) continue;
    RationalFunction a(random_poly(rng, 4), d1), b(random_poly(rng, 4), d2);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * RationalFunction(1), a);
  }
}

TEST(GeometricRewrite, Examples) {
  EXPECT_EQ(geometric_rewrite(1, 3), TruncatedSeries(3, P({1, 1, 1, 1})));
  EXPECT_EQ(geometric_rewrite(-2, 4), TruncatedSeries(4, P({0, 0, -1, 0, -1})));
  EXPECT_EQ(geometric_rewrite(3, 2), TruncatedSeries::constant(2, 1));
  EXPECT_THROW(geometric_rewrite(0, 3), std::invalid_argument);
}

// Expanding 1/(1 - t^w), after clearing t^|w| for negative w, agrees with the rewrite.
TEST(GeometricRewrite, AgreesWithExpansion) {
  for (std::int64_t w = -5; w <= 5; ++w) {
    if (w == 0) continue;
    const std::size_t a = static_cast<std::size_t>(w > 0 ? w : -w);
    RationalFunction r = w > 0 ? RationalFunction(P({1}), Polynomial::one_minus_power(a))
                               : RationalFunction(Polynomial::monomial(-1, a), Polynomial::one_minus_power(a));
    EXPECT_EQ(expand(r, 20), geometric_rewrite(w, 20)) << w;
  }
}

TEST(Series, TimesGeometricMatchesProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    TruncatedSeries s(15, random_poly(rng, 15));
    for (std::int64_t w : {-4, -1, 1, 2, 7}) {
      EXPECT_EQ(times_geometric_rewrite(s, w), naive_product(s, geometric_rewrite(w, 15)));
      EXPECT_EQ(s * geometric_rewrite(w, 15), naive_product(s, geometric_rewrite(w, 15)));
    }
  }
}

TEST(Series, ShiftTruncateAndPredicates) {
  TruncatedSeries s(4, P({1, 2, 3, 4, 5}));
  EXPECT_EQ(s.shifted(2), TruncatedSeries(4, P({0, 0, 1, 2, 3})));
  EXPECT_EQ(s.truncated(2), TruncatedSeries(2, P({1, 2, 3})));
  EXPECT_EQ(s.truncated(6).order(), 6u);
  EXPECT_FALSE(s.is_constant());
  EXPECT_TRUE(TruncatedSeries::constant(4, 7).is_constant());
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ((s + TruncatedSeries(2)).order(), 2u);
}

TEST(Series, ExpandOfSumIsSumOfExpansions) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalFunction> terms;
    TruncatedSeries termwise(12);
    for (int j = 0; j < 3; ++j) {
      Polynomial den = random_poly(rng, 3);
      if (den.constant_term() == 0) den = den + P({1});
      RationalFunction r(random_poly(rng, 3), den);
      terms.push_back(r);
      termwise = termwise + expand(r, 12);
    }
    EXPECT_EQ(expand(sum(terms), 12), termwise);
  }
}

TEST(Series, ExpandInvertsMultiplication) {
  RationalFunction r(P({1, 2}), P({1, -1, 3}));
  TruncatedSeries s = expand(r, 10);
  EXPECT_EQ(naive_product(s, TruncatedSeries(10, P({1, -1, 3}))), TruncatedSeries(10, P({1, 2})));
  EXPECT_THROW(expand(RationalFunction(P({1}), P({0, 1})), 3), std::domain_error);
}

TEST(ElementarySymmetric, SignedExponents) {
  auto sig = elementary_symmetric_powers({-1, 2, 2});
  ASSERT_EQ(sig.size(), 4u);
  EXPECT_EQ(sig[0], (LaurentTerms{{0, 1}}));
  EXPECT_EQ(sig[1], (LaurentTerms{{-1, 1}, {2, 2}}));
  EXPECT_EQ(sig[2], (LaurentTerms{{1, 2}, {4, 1}}));
  EXPECT_EQ(sig[3], (LaurentTerms{{3, 1}}));
}

TEST(ElementarySymmetric, CountsAreBinomial) {
  auto sig = elementary_symmetric_powers({1, 1, 1, 1, 1});
  const int binom[] = {1, 5, 10, 10, 5, 1};
  for (int i = 0; i <= 5; ++i) {
    ASSERT_EQ(sig[i].size(), 1u);
    EXPECT_EQ(sig[i][0].first, i);
    EXPECT_EQ(sig[i][0].second, binom[i]);
  }
}
