#include "localdensity/charsums.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "localdensity/errors.hpp"
#include "oracles.hpp"

namespace localdensity {
namespace {

using testing::coprime_to;
using testing::e;
using testing::ipow64;

TEST(GeometricExpSumTest, Examples) {
  EXPECT_EQ(geometric_exp_sum(6, 3), 3);
  EXPECT_EQ(geometric_exp_sum(1, 5), 0);
  EXPECT_EQ(geometric_exp_sum(0, 1), 1);
  EXPECT_EQ(geometric_exp_sum(-10, 5), 5);
  EXPECT_THROW(geometric_exp_sum(1, 0), PreconditionError);
}

TEST(GeometricExpSumTest, MatchesDirectSummation) {
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t a = -2 * q; a <= 2 * q; ++a) {
      std::complex<double> sum = 0;
      for (std::int64_t t = 0; t < q; ++t) sum += e(a * t, q);
      EXPECT_NEAR(sum.real(), static_cast<double>(geometric_exp_sum(a, q)), 1e-9);
      EXPECT_NEAR(sum.imag(), 0.0, 1e-9);
    }
  }
}

TEST(GeometricExpSumTest, NontrivialSumOverNonzeroTermsIsMinusOne) {
  for (std::int64_t q = 2; q <= 100; ++q) {
    for (std::int64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      std::complex<double> sum = 0;
      for (std::int64_t t = 1; t < q; ++t) sum += e(a * t, q);
      EXPECT_NEAR(sum.real(), -1.0, 1e-9);
      EXPECT_NEAR(sum.imag(), 0.0, 1e-9);
      EXPECT_EQ(geometric_exp_sum(a, q) - 1, -1);
    }
  }
}

TEST(PeriodicSumTest, ManyPeriodsScaleTheOnePeriodSum) {
  for (std::int64_t n : {3, 5, 9, 25}) {
    for (std::int64_t reps : {1, 2, 3, 7}) {
      for (std::int64_t a = 1; a < n; ++a) {
        std::complex<double> one_period = 0;
        std::complex<double> many = 0;
        for (std::int64_t t = 0; t < n; ++t) one_period += e(a * t * t, n);
        for (std::int64_t t = 0; t < n * reps; ++t) many += e(a * t * t, n);
        EXPECT_LT(std::abs(many - static_cast<double>(reps) * one_period), 1e-9);
      }
    }
  }
}

TEST(LegendrePowerUnitSumTest, Examples) {
  EXPECT_EQ(legendre_power_unit_sum(OddPrime(5), 1, 2), Rational(4));
  EXPECT_EQ(legendre_power_unit_sum(OddPrime(5), 1, 3), Rational(0));
  EXPECT_EQ(legendre_power_unit_sum(OddPrime(3), 2, 0), Rational(6));
}

TEST(LegendrePowerUnitSumTest, MatchesDirectSummation) {
  for (std::int64_t prime : {3, 5, 7}) {
    const OddPrime p(prime);
    for (std::int64_t k = 1; k <= 3; ++k) {
      for (std::int64_t m = -3; m <= 4; ++m) {
        std::int64_t direct = 0;
        for (std::int64_t t = 1; t < ipow64(prime, k); ++t) {
          if (!coprime_to(t, prime)) continue;
          const int s = legendre(t, p);
          direct += (s == -1 && m % 2 != 0) ? -1 : 1;
        }
        EXPECT_EQ(legendre_power_unit_sum(p, k, m), Rational(direct));
      }
    }
  }
}

TEST(TwistedUnitSumTest, Examples) {
  EXPECT_EQ(std::get<Rational>(twisted_unit_sum(OddPrime(3), 1, 1, 0)), Rational(-1));
  EXPECT_EQ(std::get<GaussValue>(twisted_unit_sum(OddPrime(3), 1, 1, 1)),
            GaussValue(OddPrime(3), 1, PhaseUnit::i()));
  EXPECT_EQ(std::get<Rational>(twisted_unit_sum(OddPrime(5), 2, 1, 2)), Rational(-5));
  EXPECT_THROW(twisted_unit_sum(OddPrime(5), 1, 10, 1), PreconditionError);
}

TEST(TwistedUnitSumTest, MatchesDirectSummation) {
  for (std::int64_t prime : {3, 5, 7}) {
    const OddPrime p(prime);
    for (std::int64_t k = 1; k <= 3; ++k) {
      for (std::int64_t m = -prime; m <= 2 * prime; ++m) {
        if (!coprime_to(m, prime)) continue;
        for (std::int64_t n = 0; n <= 3; ++n) {
          std::complex<double> direct = 0;
          for (std::int64_t t = 1; t < ipow64(prime, k); ++t) {
            if (!coprime_to(t, prime)) continue;
            const int s = legendre(t, p);
            direct += static_cast<double>((s == -1 && n % 2 != 0) ? -1 : 1) * e(m * t, prime);
          }
          const TwistedSum closed = twisted_unit_sum(p, k, m, n);
          const std::complex<double> value =
              std::holds_alternative<Rational>(closed)
                  ? std::complex<double>(std::get<Rational>(closed).to_double(), 0.0)
                  : std::get<GaussValue>(closed).to_complex();
          EXPECT_EQ(std::holds_alternative<Rational>(closed), n % 2 == 0);
          EXPECT_LT(std::abs(value - direct), 1e-9) << "p=" << prime << " k=" << k << " m=" << m;
        }
      }
    }
  }
}

TEST(LegendreIntervalSumTest, Examples) {
  const OddPrime p(3);
  EXPECT_EQ(legendre_interval_sum(1, p, 0, 2, 2), Rational(3));
  EXPECT_EQ(legendre_interval_sum(2, p, 0, 2, 5), Rational(1));
  EXPECT_EQ(legendre_interval_sum(2, p, 1, 1, 4), Rational(-1));
  EXPECT_THROW(legendre_interval_sum(2, p, 2, 1, 4), PreconditionError);
  EXPECT_THROW(legendre_interval_sum(2, p, 0, 5, 4), PreconditionError);
  EXPECT_THROW(legendre_interval_sum(3, p, 0, 1, 4), PreconditionError);
}

TEST(LegendreIntervalSumTest, MatchesDirectSummation) {
  for (std::int64_t prime : {3, 5, 7}) {
    const OddPrime p(prime);
    for (std::int64_t r = 1; r < prime; ++r) {
      const int s = legendre(r, p);
      for (std::int64_t k = 0; k <= 6; ++k) {
        for (std::int64_t n2 = 0; n2 <= k; ++n2) {
          for (std::int64_t n1 = 0; n1 <= n2; ++n1) {
            std::int64_t direct = 0;
            for (std::int64_t tau = k - n2; tau <= k - n1; ++tau) {
              direct += ((k - tau) % 2 != 0 && s == -1) ? -1 : 1;
            }
            EXPECT_EQ(legendre_interval_sum(r, p, n1, n2, k), Rational(direct));
          }
        }
      }
    }
  }
}

TEST(HalfPowerTailSumTest, Examples) {
  EXPECT_EQ(half_power_tail_sum(OddPrime(3), 0, 2, Parity::kEven), Rational(8) / 9);
  EXPECT_EQ(half_power_tail_sum(OddPrime(3), 0, 0, Parity::kEven), Rational(2) / 3);
  EXPECT_EQ(half_power_tail_sum(OddPrime(5), 1, 1, Parity::kEven), Rational(0));
  EXPECT_THROW(half_power_tail_sum(OddPrime(3), 0, 3, Parity::kOdd), DomainError);
  EXPECT_THROW(half_power_tail_sum(OddPrime(3), 0, 3, Parity::kEven, 1), DomainError);
  EXPECT_THROW(half_power_tail_sum(OddPrime(3), 3, 2, Parity::kEven), PreconditionError);
}

TEST(HalfPowerTailSumTest, MatchesDirectSummation) {
  for (std::int64_t prime : {3, 5, 7}) {
    const OddPrime p(prime);
    const Rational weight = Rational(1) - Rational(1) / prime;
    for (std::int64_t n2 = 0; n2 <= 7; ++n2) {
      for (std::int64_t n1 = 0; n1 <= n2; ++n1) {
        for (std::int64_t scale = -3; scale <= 4; ++scale) {
          Rational even_sum;
          Rational odd_sum;
          for (std::int64_t j = n1; j <= n2; ++j) {
            // Each term is p^((scale - j) / 2) (1 - 1/p); keep only integral powers.
            if ((scale - j) % 2 != 0) continue;
            const Rational term = Rational(prime).pow((scale - j) / 2) * weight;
            (j % 2 == 0 ? even_sum : odd_sum) += term;
          }
          if (scale % 2 == 0) {
            EXPECT_EQ(half_power_tail_sum(p, n1, n2, Parity::kEven, scale), even_sum);
          } else {
            EXPECT_EQ(half_power_tail_sum(p, n1, n2, Parity::kOdd, scale), odd_sum);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace localdensity
