#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpart/errors.hpp"
#include "qpart/series.hpp"

using qpart::Integer;
using qpart::Series;

namespace {

Series from(std::initializer_list<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return Series(std::move(c));
}

Series from_poly(const oracle::Poly& p) {
  std::vector<Integer> c;
  for (long x : p) c.emplace_back(static_cast<long>(x));
  return Series(std::move(c));
}

oracle::Poly to_poly(const Series& s) {
  oracle::Poly p;
  for (const auto& c : s.coefficients()) p.push_back(c.get_si());
  return p;
}

struct RandomSeries {
  std::mt19937_64 rng;

  explicit RandomSeries(unsigned seed) : rng(seed) {}

  std::size_t order() { return std::uniform_int_distribution<std::size_t>(0, 12)(rng); }

  Series next(std::size_t order, bool unit_constant = false) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Integer> c(order + 1);
    for (auto& x : c) x = coeff(rng);
    if (unit_constant) c[0] = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    return Series(std::move(c));
  }
};

}  // namespace

TEST(Series, ZeroAndConstant) {
  const Series z(4);
  EXPECT_EQ(z.order(), 4u);
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.valuation().has_value());
  EXPECT_EQ(Series::constant(7, 2).to_string(), "7 0 0");
  EXPECT_EQ(Series::monomial(2, 3, 4).to_string(), "0 0 3 0 0");
  EXPECT_TRUE(Series::monomial(5, 3, 4).is_zero());
}

TEST(Series, EmptyCoefficientVectorRejected) {
  EXPECT_THROW(Series(std::vector<Integer>{}), std::invalid_argument);
}

TEST(Series, CheckedCoefficientAccess) {
  const Series s = from({1, 2, 3});
  EXPECT_EQ(s.coefficient(2), 3);
  EXPECT_THROW(s.coefficient(3), qpart::IndexBeyondOrder);
}

TEST(Series, ValuationSkipsLeadingZeros) {
  EXPECT_EQ(from({0, 0, 5, 1}).valuation(), 2u);
}

TEST(Series, BinaryOpsTruncateToSmallerOrder) {
  const Series a = from({1, 1, 1, 1, 1});
  const Series b = from({1, 2});
  EXPECT_EQ((a + b).order(), 1u);
  EXPECT_EQ((a + b).to_string(), "2 3");
  EXPECT_EQ((a * b).to_string(), "1 3");
  EXPECT_EQ((a - a).to_string(), "0 0 0 0 0");
}

TEST(Series, EqualityComparesUpToSmallerOrder) {
  EXPECT_EQ(from({1, 2, 3}), from({1, 2}));
  EXPECT_NE(from({1, 2, 3}), from({1, 3}));
}

TEST(Series, InvertOneMinusQIsGeometric) {
  EXPECT_EQ(qpart::invert(from({1, -1, 0, 0, 0})).to_string(), "1 1 1 1 1");
  EXPECT_EQ(qpart::invert(from({-1, 0, 0})).to_string(), "-1 0 0");
}

TEST(Series, InvertRequiresUnitConstant) {
  EXPECT_THROW(qpart::invert(from({2, 1})), qpart::NonUnitConstantTerm);
  EXPECT_THROW(qpart::invert(from({0, 1})), qpart::NonUnitConstantTerm);
}

TEST(Series, PowersIncludingNegative) {
  const Series a = from({1, -1, 0, 0, 0, 0});
  EXPECT_EQ(qpart::pow(a, 0).to_string(), "1 0 0 0 0 0");
  EXPECT_EQ(qpart::pow(a, 2).to_string(), "1 -2 1 0 0 0");
  EXPECT_EQ(qpart::pow(a, -2).to_string(), "1 2 3 4 5 6");
}

TEST(Series, DivideExact) {
  EXPECT_EQ(qpart::divide_exact(from({2, -4, 6}), 2).to_string(), "1 -2 3");
  EXPECT_THROW(qpart::divide_exact(from({2, 3}), 2), qpart::NonIntegralQuotient);
  EXPECT_THROW(qpart::divide_exact(from({2, 4}), 0), qpart::NonIntegralQuotient);
}

TEST(Series, DilateAndShiftKeepOrder) {
  const Series a = from({1, 2, 3, 4, 5});
  EXPECT_EQ(a.dilated(2).to_string(), "1 0 2 0 3");
  EXPECT_EQ(a.shifted(2).to_string(), "0 0 1 2 3");
  EXPECT_EQ(a.truncated(2).to_string(), "1 2 3");
}

TEST(Series, FirstDivergence) {
  EXPECT_EQ(qpart::first_divergence(from({1, 2, 3}), from({1, 2, 4})), 2u);
  EXPECT_FALSE(qpart::first_divergence(from({1, 2, 3}), from({1, 2})).has_value());
  EXPECT_FALSE(qpart::first_divergence(from({9, 2}), from({1, 2}), 1).has_value());
}

TEST(Series, BigCoefficientsStayExact) {
  // (1 - q)^{-200} has binomial coefficients far beyond 64 bits at q^100.
  std::vector<Integer> base(101);
  base[0] = 1;
  base[1] = -1;
  const Series p = qpart::pow(Series(base), -200);
  Integer binom = 1;
  for (int k = 1; k <= 100; ++k) binom = binom * (199 + k) / k;
  EXPECT_EQ(p[100], binom);
  EXPECT_GT(mpz_sizeinbase(binom.get_mpz_t(), 2), 64u);
}

TEST(SeriesProperty, RingLawsAgainstSchoolbookProduct) {
  RandomSeries gen(20240611);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.order();
    const Series a = gen.next(n);
    const Series b = gen.next(n);
    const Series c = gen.next(n);
    EXPECT_EQ(a * b, from_poly(oracle::mul(to_poly(a), to_poly(b))));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Series(n));
    EXPECT_EQ(-(-a), a);
  }
}

TEST(SeriesProperty, InvertRoundTrip) {
  RandomSeries gen(77);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.order();
    const Series a = gen.next(n, true);
    const Series inv = qpart::invert(a);
    EXPECT_EQ(a * inv, Series::one(n));
    EXPECT_EQ(qpart::invert(inv), a);
  }
}

TEST(SeriesProperty, ExactDivisionUndoesScaling) {
  RandomSeries gen(5);
  for (int i = 0; i < 100; ++i) {
    const Series a = gen.next(gen.order());
    const Integer k = i % 7 + 2;
    EXPECT_EQ(qpart::divide_exact(k * a, k), a);
  }
}
