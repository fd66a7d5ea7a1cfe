#pragma once

// Quadratic Gauss sums G(a; q) = sum_{j mod q} e(a j^2 / q).
//
// Over an odd prime power every such sum is a fourth root of unity times a
// half-integer power of p, so the exact form keeps the power as an integer
// count of half steps and never materializes sqrt(p).

#include <complex>
#include <cstdint>
#include <string>

#include "localdensity/ntkernel.hpp"
#include "localdensity/rational.hpp"

namespace localdensity {

/// phase * p^(half_exponent / 2), exactly.
class GaussValue {
 public:
  GaussValue(OddPrime prime, std::int64_t half_exponent, PhaseUnit phase);

  const OddPrime& prime() const { return prime_; }
  std::int64_t half_exponent() const { return half_exponent_; }
  PhaseUnit phase() const { return phase_; }

  /// Throws DomainError on mismatched primes.
  GaussValue operator*(const GaussValue& rhs) const;
  GaussValue conj() const { return GaussValue(prime_, half_exponent_, phase_.conj()); }
  /// |value|^2 = p^half_exponent.
  BigInt norm() const;

  /// Allowed only for real phase and even half_exponent; DomainError otherwise.
  Rational to_rational() const;
  std::complex<double> to_complex() const;

  /// "phase * p^(h/2)" with the exponent reduced, e.g. "i * 3^(1/2)", "1 * 3^(2)".
  std::string str() const;

  friend bool operator==(const GaussValue&, const GaussValue&) = default;

 private:
  OddPrime prime_;
  std::int64_t half_exponent_;
  PhaseUnit phase_;
};

/// Exact G(a; p^k). a may be zero, negative, or divisible by any power of p.
GaussValue gauss_sum_exact(const BigInt& a, const OddPrime& p, std::int64_t k);

inline constexpr std::uint64_t kDefaultGaussFloatCap = 1'000'000;

/// Direct summation of G(a; q) in double precision. Oracle use only.
/// Throws ResourceLimitError when q exceeds cap.
std::complex<double> gauss_sum_float(const BigInt& a, std::uint64_t q,
                                     std::uint64_t cap = kDefaultGaussFloatCap);

/// Product of three Gauss values over the same prime.
GaussValue gauss_product(const GaussValue& x, const GaussValue& y, const GaussValue& z);

/// e(r / q) = exp(2 pi i r / q) with r reduced mod q before the division.
std::complex<double> unit_root(std::uint64_t r, std::uint64_t q);

}  // namespace localdensity
