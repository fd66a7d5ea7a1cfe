#include "localdensity/ntkernel.hpp"

#include <numbers>
#include <stdexcept>

#include "localdensity/errors.hpp"

namespace localdensity {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

OddPrime::OddPrime(std::int64_t value) : value_(value) {
  if (value == 2) {
    throw DomainError("p = 2 is not an odd prime");
  }
  if (!is_prime(value)) {
    throw DomainError(std::to_string(value) + " is not prime");
  }
}

PhaseUnit PhaseUnit::from_sign(int sign) {
  if (sign == 1) return one();
  if (sign == -1) return minus_one();
  throw DomainError("phase sign must be +1 or -1, got " + std::to_string(sign));
}

int PhaseUnit::real_sign() const {
  if (!is_real()) {
    throw DomainError("phase " + str() + " is not real");
  }
  return turns_ == 0 ? 1 : -1;
}

PhaseUnit PhaseUnit::pow(std::int64_t n) const {
  const std::int64_t t = (static_cast<std::int64_t>(turns_) * (((n % 4) + 4) % 4)) % 4;
  return PhaseUnit(static_cast<int>(t));
}

std::complex<double> PhaseUnit::to_complex() const {
  switch (turns_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string PhaseUnit::str() const {
  switch (turns_) {
    case 0: return "1";
    case 1: return "i";
    case 2: return "-1";
    default: return "-i";
  }
}

BigInt PAdicSplit::value() const {
  BigInt pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(prime.value()),
                static_cast<unsigned long>(exponent));
  return unit * pe;
}

PAdicSplit padic_split(const BigInt& n, const OddPrime& p) {
  if (n == 0) {
    throw DomainError("zero has no p-adic split");
  }
  BigInt unit = n;
  BigInt pz(static_cast<long>(p.value()));
  const auto removed = mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return PAdicSplit{unit, static_cast<int>(removed), p};
}

int valuation(const BigInt& n, const OddPrime& p) { return padic_split(n, p).exponent; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

int euler_criterion(std::uint64_t residue, std::uint64_t p) {
  if (residue == 0) return 0;
  return powmod(residue, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

int legendre(const BigInt& a, const OddPrime& p) {
  const auto r = mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p.value()));
  return euler_criterion(r, static_cast<std::uint64_t>(p.value()));
}

int legendre(std::int64_t a, const OddPrime& p) {
  std::int64_t r = a % p.value();
  if (r < 0) r += p.value();
  return euler_criterion(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(p.value()));
}

int legendre_power(const BigInt& a, const OddPrime& p, std::int64_t k) {
  if (k == 0) return 1;
  const int s = legendre(a, p);
  if (s == 0) return 0;
  return (s == -1 && k % 2 != 0) ? -1 : 1;
}

PhaseUnit epsilon(const OddPrime& p, std::int64_t k) {
  // p^k = 3 (mod 4) exactly when p = 3 (mod 4) and k is odd.
  return (p.value() % 4 == 3 && k % 2 != 0) ? PhaseUnit::i() : PhaseUnit::one();
}

std::int64_t least_nonresidue(const OddPrime& p) {
  for (std::int64_t n = 2; n < p.value(); ++n) {
    if (legendre(n, p) == -1) return n;
  }
  throw std::logic_error("no quadratic nonresidue found");
}

BigInt ipow(std::int64_t base, unsigned exponent) {
  BigInt b;
  mpz_set_si(b.get_mpz_t(), static_cast<long>(base));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

Rational prime_power(const OddPrime& p, std::int64_t exponent) {
  const BigInt magnitude = ipow(p.value(), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
}

Rational prime_power_half(const OddPrime& p, std::int64_t twice_exponent) {
  if (twice_exponent % 2 != 0) {
    throw std::logic_error("non-integral power p^(" + std::to_string(twice_exponent) +
                           "/2) reached an exact evaluation path");
  }
  return prime_power(p, twice_exponent / 2);
}

}  // namespace localdensity
