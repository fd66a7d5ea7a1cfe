#include "localdensity/gauss.hpp"

#include <cmath>
#include <numbers>

#include "localdensity/errors.hpp"

namespace localdensity {

GaussValue::GaussValue(OddPrime prime, std::int64_t half_exponent, PhaseUnit phase)
    : prime_(prime), half_exponent_(half_exponent), phase_(phase) {
  if (half_exponent < 0) {
    throw DomainError("Gauss value with negative half exponent");
  }
}

GaussValue GaussValue::operator*(const GaussValue& rhs) const {
  if (prime_ != rhs.prime_) {
    throw DomainError("Gauss values over different primes " + std::to_string(prime_.value()) +
                      " and " + std::to_string(rhs.prime_.value()));
  }
  return GaussValue(prime_, half_exponent_ + rhs.half_exponent_, phase_ * rhs.phase_);
}

BigInt GaussValue::norm() const {
  return ipow(prime_.value(), static_cast<unsigned>(half_exponent_));
}

Rational GaussValue::to_rational() const {
  if (!phase_.is_real() || half_exponent_ % 2 != 0) {
    throw DomainError("Gauss value " + str() + " is not rational");
  }
  return Rational(phase_.real_sign()) * prime_power(prime_, half_exponent_ / 2);
}

std::complex<double> GaussValue::to_complex() const {
  const double magnitude = std::pow(static_cast<double>(prime_.value()),
                                    static_cast<double>(half_exponent_) / 2.0);
  return phase_.to_complex() * magnitude;
}

std::string GaussValue::str() const {
  const std::string base = phase_.str() + " * " + std::to_string(prime_.value()) + "^(";
  if (half_exponent_ % 2 == 0) {
    return base + std::to_string(half_exponent_ / 2) + ")";
  }
  return base + std::to_string(half_exponent_) + "/2)";
}

GaussValue gauss_sum_exact(const BigInt& a, const OddPrime& p, std::int64_t k) {
  if (k < 1) {
    throw PreconditionError("Gauss sum modulus exponent must be positive");
  }
  if (a == 0) {
    return GaussValue(p, 2 * k, PhaseUnit::one());
  }
  const PAdicSplit split = padic_split(a, p);
  const std::int64_t ell = split.exponent;
  if (ell >= k) {
    return GaussValue(p, 2 * k, PhaseUnit::one());
  }
  const int symbol = legendre_power(split.unit, p, k - ell);
  return GaussValue(p, k + ell, PhaseUnit::from_sign(symbol) * epsilon(p, k - ell));
}

std::complex<double> unit_root(std::uint64_t r, std::uint64_t q) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r % q) / static_cast<double>(q);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> gauss_sum_float(const BigInt& a, std::uint64_t q, std::uint64_t cap) {
  if (q == 0) {
    throw DomainError("Gauss sum modulus must be positive");
  }
  if (q > cap) {
    throw ResourceLimitError("Gauss sum modulus " + std::to_string(q) + " exceeds cap " +
                             std::to_string(cap));
  }
  const std::uint64_t ar = mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(q));
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t j = 0; j < q; ++j) {
    const auto jj = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * j % q);
    const auto r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(ar) * jj % q);
    sum += unit_root(r, q);
  }
  return sum;
}

GaussValue gauss_product(const GaussValue& x, const GaussValue& y, const GaussValue& z) {
  return x * y * z;
}

}  // namespace localdensity
