#include "localdensity/rational.hpp"

#include <gtest/gtest.h>

#include <random>

#include "localdensity/errors.hpp"

namespace localdensity {
namespace {

TEST(RationalTest, StoredInLowestTerms) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
}

TEST(RationalTest, Arithmetic) {
  const Rational third = Rational(1) / 3;
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ((Rational(2) / 3) * (Rational(3) / 4), Rational(1) / 2);
  EXPECT_EQ(Rational(1) - Rational(1) / 9, Rational(8) / 9);
  EXPECT_EQ((Rational(2) / 3).pow(-2), Rational(9) / 4);
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_LT(Rational(1) / 3, Rational(1) / 2);
}

TEST(RationalTest, Errors) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW((Rational(1) / 2).to_integer(), DomainError);
  EXPECT_THROW(Rational(0).pow(-1), DomainError);
  EXPECT_THROW(Rational::parse("3/x"), DomainError);
  EXPECT_THROW(Rational::parse(""), DomainError);
  EXPECT_THROW(Rational::parse("-"), DomainError);
}

TEST(RationalTest, ParseRoundTripsRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    std::int64_t den = dist(rng);
    if (den == 0) den = 1;
    const Rational r(BigInt(static_cast<long>(dist(rng))), BigInt(static_cast<long>(den)));
    EXPECT_EQ(Rational::parse(r.str()), r);
    EXPECT_GT(r.denominator(), 0);
  }
  EXPECT_EQ(Rational::parse("+4/6"), Rational(2) / 3);
}

}  // namespace
}  // namespace localdensity
