#include "localdensity/charsums.hpp"

#include "localdensity/errors.hpp"

namespace localdensity {

std::int64_t geometric_exp_sum(const BigInt& a, std::int64_t q) {
  if (q < 1) {
    throw PreconditionError("geometric_exp_sum needs q >= 1");
  }
  return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(q)) == 0 ? q : 0;
}

Rational legendre_power_unit_sum(const OddPrime& p, std::int64_t k, std::int64_t m) {
  if (k < 1) {
    throw PreconditionError("legendre_power_unit_sum needs k >= 1");
  }
  if (m % 2 != 0) {
    return Rational(0);
  }
  return prime_power(p, k) * (Rational(1) - prime_power(p, -1));
}

TwistedSum twisted_unit_sum(const OddPrime& p, std::int64_t k, const BigInt& m, std::int64_t n) {
  if (k < 1) {
    throw PreconditionError("twisted_unit_sum needs k >= 1");
  }
  if (legendre(m, p) == 0) {
    throw PreconditionError("twisted_unit_sum needs m coprime to p");
  }
  if (n % 2 == 0) {
    return -prime_power(p, k - 1);
  }
  return GaussValue(p, 2 * k - 1, PhaseUnit::from_sign(legendre(m, p)) * epsilon(p, 1));
}

Rational legendre_interval_sum(const BigInt& r, const OddPrime& p, std::int64_t n1,
                               std::int64_t n2, std::int64_t k) {
  if (!(0 <= n1 && n1 <= n2 && n2 <= k)) {
    throw PreconditionError("legendre_interval_sum needs 0 <= n1 <= n2 <= k");
  }
  const int symbol = legendre(r, p);
  if (symbol == 0) {
    throw PreconditionError("legendre_interval_sum needs r coprime to p");
  }
  const Rational half_count = Rational(n2 - n1 + 1) / 2;
  const Rational correction = Rational((n1 % 2 == 0 ? 1 : -1) + (n2 % 2 == 0 ? 1 : -1)) / 4;
  return half_count + correction + Rational(symbol) * (half_count - correction);
}

Rational half_power_tail_sum(const OddPrime& p, std::int64_t n1, std::int64_t n2, Parity parity,
                             std::int64_t twice_scale) {
  if (!(0 <= n1 && n1 <= n2)) {
    throw PreconditionError("half_power_tail_sum needs 0 <= n1 <= n2");
  }
  const bool scale_odd = twice_scale % 2 != 0;
  if (parity == Parity::kEven) {
    if (scale_odd) {
      throw DomainError("even-parity tail sum scaled by a half power is not rational");
    }
    const std::int64_t lo = ceil_div(n1, 2);
    const std::int64_t hi = floor_div(n2, 2);
    return prime_power_half(p, twice_scale - 2 * lo) *
           (Rational(1) - prime_power(p, -hi + lo - 1));
  }
  if (!scale_odd) {
    throw DomainError("odd-parity tail sum carries p^(1/2); the enclosing power must absorb it");
  }
  const std::int64_t lo = ceil_div(n1 + 1, 2);
  const std::int64_t hi = floor_div(n2 + 1, 2);
  return prime_power_half(p, twice_scale + 1 - 2 * lo) *
         (Rational(1) - prime_power(p, -hi + lo - 1));
}

}  // namespace localdensity
