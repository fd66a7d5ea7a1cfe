#pragma once

// Closed forms for the exponential and Legendre-character sums used when the
// local counts are assembled stratum by stratum.

#include <cstdint>
#include <variant>

#include "localdensity/gauss.hpp"
#include "localdensity/ntkernel.hpp"
#include "localdensity/rational.hpp"

namespace localdensity {

/// sum_{t=0}^{q-1} e(a t / q): q if q | a, else 0.
std::int64_t geometric_exp_sum(const BigInt& a, std::int64_t q);

/// sum over units t of Z/p^kZ of (t|p)^m.
Rational legendre_power_unit_sum(const OddPrime& p, std::int64_t k, std::int64_t m);

/// Rational for even n, GaussValue for odd n.
using TwistedSum = std::variant<Rational, GaussValue>;

/// sum over units t of Z/p^kZ of e(m t / p) (t|p)^n, for m coprime to p.
TwistedSum twisted_unit_sum(const OddPrime& p, std::int64_t k, const BigInt& m, std::int64_t n);

/// sum_{tau=k-n2}^{k-n1} (r|p)^(k-tau), for 0 <= n1 <= n2 <= k and r coprime to p.
Rational legendre_interval_sum(const BigInt& r, const OddPrime& p, std::int64_t n1,
                               std::int64_t n2, std::int64_t k);

enum class Parity { kEven, kOdd };

/// sum over j in [n1, n2] with j of the given parity of p^(-j/2) (1 - 1/p),
/// multiplied by p^(twice_scale/2).
///
/// The odd-parity sum carries a factor p^(1/2), so the result is rational only
/// when twice_scale is odd; an even-parity sum needs twice_scale even. Any
/// other combination throws DomainError.
Rational half_power_tail_sum(const OddPrime& p, std::int64_t n1, std::int64_t n2, Parity parity,
                             std::int64_t twice_scale = 0);

}  // namespace localdensity
