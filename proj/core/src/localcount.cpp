#include "localdensity/localcount.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "localdensity/charsums.hpp"
#include "localdensity/errors.hpp"
#include "localdensity/gauss.hpp"

namespace localdensity {

DiagonalForm::DiagonalForm(BigInt a, BigInt b, BigInt c)
    : coefficients_{std::move(a), std::move(b), std::move(c)} {
  for (const auto& coefficient : coefficients_) {
    if (coefficient == 0) {
      throw DomainError("diagonal form coefficients must be nonzero");
    }
  }
}

namespace {

// n^3 must fit in 64 bits.
constexpr std::int64_t kHardModulusLimit = 2'000'000;

void check_modulus(std::int64_t n, std::int64_t cap) {
  if (n < 1) {
    throw DomainError("modulus must be positive");
  }
  if (n > cap || n > kHardModulusLimit) {
    throw ResourceLimitError("modulus " + std::to_string(n) + " exceeds brute-force cap " +
                             std::to_string(std::min(cap, kHardModulusLimit)));
  }
}

std::uint64_t residue(const BigInt& x, std::int64_t n) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(n));
}

// h[t] = #{x mod n : coefficient * x^2 = t (mod n)}.
std::vector<std::uint64_t> square_histogram(const BigInt& coefficient, std::int64_t n) {
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t c = residue(coefficient, n);
  std::vector<std::uint64_t> histogram(un, 0);
  for (std::uint64_t x = 0; x < un; ++x) {
    const std::uint64_t sq = x * x % un;
    ++histogram[static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) * sq % un)];
  }
  return histogram;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> support(
    const std::vector<std::uint64_t>& histogram) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t t = 0; t < histogram.size(); ++t) {
    if (histogram[t] != 0) out.emplace_back(t, histogram[t]);
  }
  return out;
}

// The valuation data the stratified evaluators work from.
struct Shape {
  BigInt a;
  BigInt b0;
  BigInt c0;
  std::int64_t b1 = 0;
  std::int64_t c1 = 0;
};

Shape shape_of(const DiagonalForm& form, const OddPrime& p) {
  if (legendre(form.a(), p) == 0) {
    throw PreconditionError("stratified count needs p not dividing a");
  }
  const PAdicSplit b = padic_split(form.b(), p);
  const PAdicSplit c = padic_split(form.c(), p);
  if (b.exponent > c.exponent) {
    throw PreconditionError("stratified count needs v_p(b) <= v_p(c)");
  }
  return Shape{form.a(), b.unit, c.unit, b.exponent, c.exponent};
}

Rational one_minus_inv(const OddPrime& p) { return Rational(1) - prime_power(p, -1); }

int symbol_power(const BigInt& x, const OddPrime& p, std::int64_t e) {
  return legendre_power(x, p, e);
}

// s_{k, k-m1-1}, the only stratum that sees the unit part of m.
Rational boundary_stratum(const Shape& s, const PAdicSplit& m, const OddPrime& p,
                          std::int64_t k) {
  const std::int64_t m1 = m.exponent;
  const BigInt& m0 = m.unit;
  const std::int64_t b1 = s.b1;
  const std::int64_t c1 = s.c1;
  if (m1 < b1) {
    if (m1 % 2 == 0) {
      return prime_power_half(p, 6 * k + m1) * legendre(BigInt(s.a * m0), p);
    }
    return -prime_power_half(p, 6 * k + m1 - 1);
  }
  if (m1 < c1) {
    if (b1 % 2 == 0) {
      return -prime_power_half(p, 6 * k + b1 - 2) *
             symbol_power(BigInt(-s.a * s.b0), p, m1 + 1);
    }
    return prime_power_half(p, 6 * k + b1 - 1) * symbol_power(s.a, p, m1 + 1) *
           symbol_power(s.b0, p, m1) * legendre(m0, p);
  }
  if ((b1 - c1) % 2 == 0) {
    const BigInt bc = -s.b0 * s.c0;
    if (m1 % 2 == 0) {
      return prime_power_half(p, 6 * k - m1 + b1 + c1 - 2) * legendre(BigInt(s.a * m0), p) *
             symbol_power(bc, p, b1 + 1);
    }
    return -prime_power_half(p, 6 * k - m1 - 1 + b1 + c1 - 2) * symbol_power(bc, p, b1);
  }
  if (m1 % 2 == 0) {
    return -prime_power_half(p, 6 * k - m1 + b1 + c1 - 3) * legendre(BigInt(-s.a), p) *
           symbol_power(s.b0, p, b1 + 1) * symbol_power(s.c0, p, b1);
  }
  return prime_power_half(p, 6 * k - m1 - 1 + b1 + c1 - 1) * symbol_power(s.b0, p, b1) *
         symbol_power(s.c0, p, b1 + 1) * legendre(m0, p);
}

// s_{k,tau} for tau >= k - m1, written in terms of j = k - tau in [1, m1].
Rational inner_stratum(const Shape& s, std::int64_t m1, const OddPrime& p, std::int64_t k,
                       std::int64_t j) {
  const std::int64_t b1 = s.b1;
  const std::int64_t c1 = s.c1;
  if (j <= std::min(m1, b1)) {
    return j % 2 == 0 ? prime_power_half(p, 6 * k + j) * one_minus_inv(p) : Rational(0);
  }
  if (j <= c1 || m1 < c1) {
    // b1 < j <= min(m1, c1): only the first two Gauss sums are nontrivial.
    if (b1 % 2 != 0) return Rational(0);
    return prime_power_half(p, 6 * k + b1) * symbol_power(BigInt(-s.a * s.b0), p, j) *
           one_minus_inv(p);
  }
  // c1 < j <= m1.
  if ((b1 - c1) % 2 == 0) {
    if (j % 2 != 0) return Rational(0);
    return prime_power_half(p, 6 * k - j + b1 + c1) * symbol_power(BigInt(-s.b0 * s.c0), p, b1) *
           one_minus_inv(p);
  }
  if (j % 2 == 0) return Rational(0);
  return prime_power_half(p, 6 * k + b1 + c1 - j) * legendre(BigInt(-s.a), p) *
         symbol_power(s.b0, p, b1 + 1) * symbol_power(s.c0, p, b1) * one_minus_inv(p);
}

void check_stratified_preconditions(const BigInt& m, const PAdicSplit& split, std::int64_t k) {
  if (m == 0) {
    throw PreconditionError("count_stratified needs m != 0; use count_zero_stratified");
  }
  if (k <= split.exponent) {
    throw PreconditionError("count_stratified needs k >= v_p(m) + 1");
  }
}

}  // namespace

std::uint64_t count_bruteforce(const BigInt& m, const DiagonalForm& form, std::int64_t n,
                               std::int64_t cap) {
  check_modulus(n, cap);
  const auto un = static_cast<std::uint64_t>(n);
  const auto ha = support(square_histogram(form.a(), n));
  const auto hb = support(square_histogram(form.b(), n));
  const auto hc = square_histogram(form.c(), n);
  const std::uint64_t target = residue(m, n);

  std::uint64_t total = 0;
  for (const auto& [u, cu] : ha) {
    const std::uint64_t rest = (target + un - u) % un;
    std::uint64_t inner = 0;
    for (const auto& [v, cv] : hb) {
      const std::uint64_t w = rest >= v ? rest - v : rest + un - v;
      inner += cv * hc[w];
    }
    total += cu * inner;
  }
  return total;
}

std::uint64_t count_bruteforce_binary(const BigInt& m, const BigInt& a, const BigInt& b,
                                      std::int64_t n, std::int64_t cap) {
  if (a == 0 || b == 0) {
    throw DomainError("binary form coefficients must be nonzero");
  }
  check_modulus(n, cap);
  const auto un = static_cast<std::uint64_t>(n);
  const auto ha = support(square_histogram(a, n));
  const auto hb = square_histogram(b, n);
  const std::uint64_t target = residue(m, n);
  std::uint64_t total = 0;
  for (const auto& [u, cu] : ha) {
    total += cu * hb[(target + un - u) % un];
  }
  return total;
}

FloatCount count_via_gauss_float(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                                 std::int64_t k, std::int64_t cap) {
  if (k < 1) {
    throw PreconditionError("count_via_gauss_float needs k >= 1");
  }
  const BigInt q_big = ipow(p.value(), static_cast<unsigned>(k));
  if (q_big > cap) {
    throw ResourceLimitError("p^k = " + q_big.get_str() + " exceeds Gauss-float cap " +
                             std::to_string(cap));
  }
  const auto q = static_cast<std::uint64_t>(q_big.get_ui());
  const std::uint64_t minus_m = (q - residue(m, static_cast<std::int64_t>(q))) % q;

  std::complex<long double> sum{0.0L, 0.0L};
  for (std::uint64_t t = 1; t < q; ++t) {
    const BigInt tz(static_cast<unsigned long>(t));
    const GaussValue g = gauss_product(gauss_sum_exact(form.a() * tz, p, k),
                                       gauss_sum_exact(form.b() * tz, p, k),
                                       gauss_sum_exact(form.c() * tz, p, k));
    const auto twist = unit_root(static_cast<std::uint64_t>(
                                     static_cast<unsigned __int128>(minus_m) * t % q),
                                 q);
    const std::complex<double> term = twist * g.to_complex();
    sum += std::complex<long double>(term.real(), term.imag());
  }
  const long double q2 = static_cast<long double>(q) * static_cast<long double>(q);
  const std::complex<long double> value = q2 + sum / static_cast<long double>(q);
  const long double rounded = std::round(value.real());
  const long double residual = std::abs(value - std::complex<long double>(rounded, 0.0L));
  const double relative = static_cast<double>(residual / q2);
  if (relative > 1e-3 || residual >= 0.5L || rounded < 0) {
    throw NumericalInstabilityError("Gauss-sum evaluation of r_" + q_big.get_str() +
                                    " has residual " + std::to_string(static_cast<double>(residual)));
  }
  return FloatCount{static_cast<std::uint64_t>(rounded), relative};
}

bool is_normalized_at(const DiagonalForm& form, const OddPrime& p) {
  return legendre(form.a(), p) != 0 && valuation(form.b(), p) <= valuation(form.c(), p);
}

std::vector<StratumTerm> stratum_terms(const BigInt& m, const DiagonalForm& form,
                                       const OddPrime& p, std::int64_t k) {
  const Shape s = shape_of(form, p);
  const PAdicSplit split = m == 0 ? PAdicSplit{0, 0, p} : padic_split(m, p);
  check_stratified_preconditions(m, split, k);
  const std::int64_t m1 = split.exponent;

  std::vector<StratumTerm> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (std::int64_t tau = 0; tau < k; ++tau) {
    Rational value;
    if (tau <= k - m1 - 2) {
      value = 0;
    } else if (tau == k - m1 - 1) {
      value = boundary_stratum(s, split, p, k);
    } else {
      value = inner_stratum(s, m1, p, k, k - tau);
    }
    terms.push_back(StratumTerm{k, tau, value});
  }
  return terms;
}

BigInt count_stratified(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                        std::int64_t k) {
  const Shape s = shape_of(form, p);
  const PAdicSplit split = m == 0 ? PAdicSplit{0, 0, p} : padic_split(m, p);
  check_stratified_preconditions(m, split, k);
  const std::int64_t m1 = split.exponent;
  const std::int64_t b1 = s.b1;
  const std::int64_t c1 = s.c1;

  // Strata with tau <= k - m1 - 2 vanish; tau = k - m1 - 1 is the boundary.
  Rational strata = boundary_stratum(s, split, p, k);

  // tau in [k - min(m1, b1), k - 1].
  const std::int64_t n1 = std::min(m1, b1);
  strata += prime_power(p, 3 * k) * (prime_power(p, n1 / 2) - 1);

  const BigInt ab = -s.a * s.b0;
  if (m1 < c1) {
    // tau in [k - m1, k - b1 - 1], present only when b1 < m1.
    if (b1 < m1 && b1 % 2 == 0) {
      strata += prime_power_half(p, 6 * k + b1) * one_minus_inv(p) *
                legendre_interval_sum(ab, p, b1 + 1, m1, k);
    }
  } else {
    // tau in [k - m1, k - c1 - 1].
    if (c1 < m1) {
      if ((b1 - c1) % 2 == 0) {
        strata += symbol_power(BigInt(-s.b0 * s.c0), p, b1) *
                  half_power_tail_sum(p, c1 + 1, m1, Parity::kEven, 6 * k + b1 + c1);
      } else {
        strata += Rational(legendre(BigInt(-s.a), p) * symbol_power(s.b0, p, b1 + 1) *
                           symbol_power(s.c0, p, b1)) *
                  half_power_tail_sum(p, c1 + 1, m1, Parity::kOdd, 6 * k + b1 + c1);
      }
    }
    // tau in [k - c1, k - b1 - 1].
    if (b1 < c1 && b1 % 2 == 0) {
      strata += prime_power_half(p, 6 * k + b1) * one_minus_inv(p) *
                legendre_interval_sum(ab, p, b1 + 1, c1, k);
    }
  }

  const Rational count = prime_power(p, 2 * k) + strata * prime_power(p, -k);
  return count.to_integer();
}

BigInt count_zero_stratified(const DiagonalForm& form, const OddPrime& p, std::int64_t k) {
  const Shape s = shape_of(form, p);
  const std::int64_t b1 = s.b1;
  const std::int64_t c1 = s.c1;
  if (k <= c1) {
    throw PreconditionError("count_zero_stratified needs k >= v_p(c) + 1");
  }
  const Rational inv = prime_power(p, -1);
  Rational count;
  if (b1 % 2 == 0) {
    const Rational lead = prime_power_half(p, 4 * k + b1);
    const int sym = legendre(BigInt(-s.a * s.b0), p);
    if (c1 % 2 == 0) {
      count = lead * inv * (Rational(1) - prime_power_half(p, -2 * (k / 2) + c1)) + lead +
              lead * (Rational(1) - inv) * Rational(c1 - b1, 2) * (1 + sym);
    } else {
      count = lead * inv * sym * (Rational(1) - prime_power_half(p, -2 * ((k + 1) / 2) + c1 + 1)) +
              lead +
              lead * (Rational(1) - inv) *
                  (Rational(c1 - b1 - 1, 2) + Rational(sym) * Rational(c1 - b1 + 1, 2));
    }
  } else {
    const Rational lead = prime_power_half(p, 4 * k + b1 - 1);
    if (c1 % 2 == 0) {
      const int sym = legendre(BigInt(-s.a * s.c0), p);
      count = lead * sym * (Rational(1) - prime_power_half(p, -2 * ((k + 1) / 2) + c1)) + lead;
    } else {
      const int sym = legendre(BigInt(-s.b0 * s.c0), p);
      count = lead * sym * (Rational(1) - prime_power_half(p, -2 * (k / 2) + c1 - 1)) + lead;
    }
  }
  return count.to_integer();
}

BigInt count_local(const BigInt& m, const DiagonalForm& form, const OddPrime& p, std::int64_t k,
                   std::int64_t cap) {
  if (k < 1) {
    throw PreconditionError("count_local needs k >= 1");
  }
  // Stratified evaluation applies when some coefficient is a unit.
  std::array<std::pair<std::int64_t, const BigInt*>, 3> by_valuation{};
  for (std::size_t i = 0; i < 3; ++i) {
    by_valuation[i] = {valuation(form.coefficients()[i], p), &form.coefficients()[i]};
  }
  std::stable_sort(by_valuation.begin(), by_valuation.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  if (by_valuation[0].first == 0) {
    const DiagonalForm sorted(*by_valuation[0].second, *by_valuation[1].second,
                              *by_valuation[2].second);
    if (m != 0 && k > valuation(m, p)) {
      return count_stratified(m, sorted, p, k);
    }
    if (m == 0 && k > by_valuation[2].first) {
      return count_zero_stratified(sorted, p, k);
    }
  }
  const BigInt n = ipow(p.value(), static_cast<unsigned>(k));
  if (n > cap) {
    throw ResourceLimitError("p^k = " + n.get_str() + " exceeds brute-force cap " +
                             std::to_string(cap));
  }
  return BigInt(static_cast<unsigned long>(count_bruteforce(m, form, n.get_si(), cap)));
}

}  // namespace localdensity
