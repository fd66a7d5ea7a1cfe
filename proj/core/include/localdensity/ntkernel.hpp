#pragma once

// Number-theory primitives at an odd prime: p-adic splitting, Legendre
// symbols, and the fourth-root-of-unity phases that show up in Gauss sums.

#include <complex>
#include <cstdint>
#include <string>

#include "localdensity/rational.hpp"

namespace localdensity {

/// A prime p >= 3, checked by trial division on construction.
class OddPrime {
 public:
  explicit OddPrime(std::int64_t value);

  std::int64_t value() const { return value_; }

  friend bool operator==(const OddPrime&, const OddPrime&) = default;

 private:
  std::int64_t value_;
};

bool is_prime(std::int64_t n);

/// An element of the cyclic group {1, i, -1, -i}, stored as a count of quarter turns.
class PhaseUnit {
 public:
  constexpr PhaseUnit() = default;

  static constexpr PhaseUnit one() { return PhaseUnit(0); }
  static constexpr PhaseUnit i() { return PhaseUnit(1); }
  static constexpr PhaseUnit minus_one() { return PhaseUnit(2); }
  static constexpr PhaseUnit minus_i() { return PhaseUnit(3); }
  /// +1 or -1 from a sign; any other value is a DomainError.
  static PhaseUnit from_sign(int sign);

  constexpr int quarter_turns() const { return turns_; }
  constexpr bool is_real() const { return turns_ % 2 == 0; }
  /// +1 or -1; throws DomainError when the phase is +-i.
  int real_sign() const;

  constexpr PhaseUnit operator*(PhaseUnit rhs) const { return PhaseUnit(turns_ + rhs.turns_); }
  constexpr PhaseUnit& operator*=(PhaseUnit rhs) { return *this = *this * rhs; }
  constexpr PhaseUnit conj() const { return PhaseUnit(-turns_); }
  PhaseUnit pow(std::int64_t n) const;

  std::complex<double> to_complex() const;
  /// "1", "i", "-1" or "-i".
  std::string str() const;

  friend constexpr bool operator==(PhaseUnit, PhaseUnit) = default;

 private:
  constexpr explicit PhaseUnit(int turns) : turns_(((turns % 4) + 4) % 4) {}

  int turns_ = 0;
};

/// n = unit * p^exponent with gcd(unit, p) = 1.
struct PAdicSplit {
  BigInt unit;
  int exponent = 0;
  OddPrime prime;

  BigInt value() const;
};

/// Throws DomainError for n = 0.
PAdicSplit padic_split(const BigInt& n, const OddPrime& p);

/// v_p(n); throws DomainError for n = 0.
int valuation(const BigInt& n, const OddPrime& p);

/// Legendre symbol (a|p) by Euler's criterion on a mod p.
int legendre(const BigInt& a, const OddPrime& p);
int legendre(std::int64_t a, const OddPrime& p);

/// (a|p)^k, with the k = 0 value taken to be 1.
int legendre_power(const BigInt& a, const OddPrime& p, std::int64_t k);

/// 1 if p^k = 1 (mod 4), i if p^k = 3 (mod 4).
PhaseUnit epsilon(const OddPrime& p, std::int64_t k);

/// Smallest positive quadratic nonresidue mod p.
std::int64_t least_nonresidue(const OddPrime& p);

BigInt ipow(std::int64_t base, unsigned exponent);

/// p^exponent as an exact rational; negative exponents allowed.
Rational prime_power(const OddPrime& p, std::int64_t exponent);

/// p^(twice_exponent / 2). Throws std::logic_error if the exponent is odd:
/// every call site expects its half powers to have cancelled already.
Rational prime_power_half(const OddPrime& p, std::int64_t twice_exponent);

/// Floor/ceil division by a positive divisor that works for negative numerators.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}
constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

}  // namespace localdensity
