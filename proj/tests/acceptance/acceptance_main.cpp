// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every check evaluates its own loops against the library; nothing here goes
// through the verify command.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "localdensity/charsums.hpp"
#include "localdensity/density.hpp"
#include "localdensity/gauss.hpp"
#include "localdensity/localcount.hpp"
#include "oracles.hpp"

namespace {

using namespace localdensity;
using testing::e;
using testing::ipow64;

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

DiagonalForm form(std::int64_t a, std::int64_t b, std::int64_t c) {
  return DiagonalForm(big(a), big(b), big(c));
}

BigInt brute(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
  return BigInt(static_cast<unsigned long>(count_bruteforce(big(m), form(a, b, c), n)));
}

std::string tuple(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t m,
                  std::int64_t k) {
  return "p=" + std::to_string(p) + " Q=(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ") m=" + std::to_string(m) + " k=" + std::to_string(k);
}

struct UnitForm {
  std::int64_t a, b, c, b1, c1;
};

std::vector<UnitForm> unit_forms(std::int64_t p, std::int64_t c1_max) {
  const std::int64_t n = least_nonresidue(OddPrime(p));
  std::vector<UnitForm> out;
  for (std::int64_t b1 = 0; b1 <= c1_max; ++b1) {
    for (std::int64_t c1 = b1; c1 <= c1_max; ++c1) {
      for (std::int64_t a : {std::int64_t{1}, n}) {
        for (std::int64_t b0 : {std::int64_t{1}, n}) {
          for (std::int64_t c0 : {std::int64_t{1}, n}) {
            out.push_back({a, b0 * ipow64(p, b1), c0 * ipow64(p, c1), b1, c1});
          }
        }
      }
    }
  }
  return out;
}

// The nonzero-m grid shared by criteria 1 to 3.
template <typename Fn>
void nonzero_grid(Fn&& fn) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const std::int64_t n = least_nonresidue(OddPrime(p));
    for (const UnitForm& f : unit_forms(p, 3)) {
      for (std::int64_t m1 = 0; m1 <= f.c1 + 2; ++m1) {
        for (std::int64_t m0 : {std::int64_t{1}, std::int64_t{-1}, n, -n}) {
          fn(p, f, m0 * ipow64(p, m1), m1);
        }
      }
    }
  }
}

Tally closed_form_vs_brute() {
  Tally t;
  nonzero_grid([&](std::int64_t p, const UnitForm& f, std::int64_t m, std::int64_t m1) {
    const std::int64_t k = m1 + 1;
    if (ipow64(p, k) > 10'000) return;
    const OddPrime prime(p);
    const Rational scaled = local_density(big(m), form(f.a, f.b, f.c), prime).value *
                            prime_power(prime, 2 * k);
    t.check(scaled == Rational(brute(m, f.a, f.b, f.c, ipow64(p, k))),
            tuple(p, f.a, f.b, f.c, m, k) + " alpha p^2k = " + scaled.str());
  });
  return t;
}

Tally stabilization() {
  Tally t;
  nonzero_grid([&](std::int64_t p, const UnitForm& f, std::int64_t m, std::int64_t m1) {
    if (ipow64(p, m1 + 2) > 10'000) return;
    t.check(brute(m, f.a, f.b, f.c, ipow64(p, m1 + 2)) ==
                p * p * brute(m, f.a, f.b, f.c, ipow64(p, m1 + 1)),
            tuple(p, f.a, f.b, f.c, m, m1 + 2));
  });
  return t;
}

Tally three_evaluators() {
  Tally t;
  nonzero_grid([&](std::int64_t p, const UnitForm& f, std::int64_t m, std::int64_t m1) {
    const std::int64_t k = m1 + 1;
    if (ipow64(p, k) > 2401) return;
    const OddPrime prime(p);
    const auto q = form(f.a, f.b, f.c);
    const BigInt b = brute(m, f.a, f.b, f.c, ipow64(p, k));
    const FloatCount fc = count_via_gauss_float(big(m), q, prime, k);
    t.check(fc.relative_residual < 1e-3 && BigInt(static_cast<unsigned long>(fc.value)) == b &&
                count_stratified(big(m), q, prime, k) == b,
            tuple(p, f.a, f.b, f.c, m, k));
  });
  return t;
}

Tally zero_density_checks() {
  Tally t;
  for (std::int64_t p : {3, 5, 7}) {
    const OddPrime prime(p);
    for (const UnitForm& f : unit_forms(p, 2)) {
      const auto q = form(f.a, f.b, f.c);
      const Rational alpha = local_density(0, q, prime).value;
      for (std::int64_t k = f.c1 + 1; k <= 4; ++k) {
        const BigInt exact = count_zero_stratified(q, prime, k);
        t.check(exact == brute(0, f.a, f.b, f.c, ipow64(p, k)), tuple(p, f.a, f.b, f.c, 0, k));
        const double gap = (Rational(exact) * prime_power(prime, -2 * k) - alpha).abs().to_double();
        const double bound =
            std::pow(static_cast<double>(p), -(k / 2) + static_cast<double>(f.b1 + f.c1) / 2 + 1);
        t.check(gap <= bound, tuple(p, f.a, f.b, f.c, 0, k) + " gap " + std::to_string(gap));
      }
    }
  }
  return t;
}

Tally unramified() {
  Tally t;
  for (std::int64_t p = 3; p <= 31; p += 2) {
    if (!is_prime(p)) continue;
    const OddPrime prime(p);
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        for (std::int64_t c = 1; c < p; ++c) {
          for (std::int64_t m = 1; m < p; ++m) {
            const int s = legendre(big(-a * b * c * m), prime);
            const Rational expected = Rational(1) + Rational(s) / Rational(p);
            t.check(local_density(big(m), form(a, b, c), prime).value == expected,
                    tuple(p, a, b, c, m, 0));
          }
        }
      }
    }
  }
  return t;
}

Tally berkovich_jagy() {
  Tally t;
  for (std::int64_t p : {3, 5, 7, 11}) {
    const OddPrime prime(p);
    for (std::int64_t u = 1; u < p; ++u) {
      if (legendre(big(-u), prime) != -1) continue;
      for (std::int64_t m0 = 1; m0 < p; ++m0) {
        for (std::int64_t m1 = 0; m1 <= 4; ++m1) {
          const std::int64_t m = m0 * ipow64(p, m1);
          t.check(local_density(big(m), form(u, p, u * p), prime).value ==
                      bj_density(big(u), big(m), prime),
                  tuple(p, u, p, u * p, m, 0));
        }
      }
    }
  }
  return t;
}

Tally gauss_sums() {
  Tally t;
  for (std::int64_t p : {3, 5, 7}) {
    const OddPrime prime(p);
    const std::int64_t k_max = p == 7 ? 4 : 3;
    for (std::int64_t k = 1; k <= k_max; ++k) {
      const std::int64_t q = ipow64(p, k);
      const double tol = 1e-6 * std::pow(static_cast<double>(p), k / 2.0);
      for (std::int64_t a = 0; a < q; ++a) {
        const auto exact = gauss_sum_exact(big(a), prime, k).to_complex();
        t.check(std::abs(exact - testing::direct_gauss(a, q)) <= tol,
                "p=" + std::to_string(p) + " k=" + std::to_string(k) + " a=" + std::to_string(a));
      }
    }
  }
  return t;
}

Tally character_sums() {
  Tally t;
  // Complete exponential sums, and the sum over nonzero terms.
  for (std::int64_t q = 1; q <= 60; ++q) {
    for (std::int64_t a = -q; a <= 2 * q; ++a) {
      std::complex<double> direct = 0;
      for (std::int64_t x = 0; x < q; ++x) direct += e(a * x, q);
      t.check(std::abs(direct - static_cast<double>(geometric_exp_sum(big(a), q))) <= 1e-9,
              "geometric q=" + std::to_string(q) + " a=" + std::to_string(a));
      if (std::gcd(a, q) == 1 && q > 1) {
        // Dropping the x = 0 term leaves -1.
        t.check(std::abs(direct - 1.0 + 1.0) <= 1e-9 && geometric_exp_sum(big(a), q) - 1 == -1,
                "nonzero terms q=" + std::to_string(q) + " a=" + std::to_string(a));
      }
    }
  }
  for (std::int64_t p : {3, 5, 7, 11}) {
    const OddPrime prime(p);
    for (std::int64_t k = 1; k <= 3; ++k) {
      const std::int64_t q = ipow64(p, k);
      // Powers of the Legendre symbol summed over units.
      for (std::int64_t m = 0; m <= 5; ++m) {
        std::int64_t direct = 0;
        for (std::int64_t x = 1; x < q; ++x) {
          if (x % p == 0) continue;
          direct += (legendre(big(x), prime) == -1 && m % 2 == 1) ? -1 : 1;
        }
        t.check(legendre_power_unit_sum(prime, k, m) == Rational(direct),
                "unit sum p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
      // Twisted sums over units.
      for (std::int64_t m = 1; m < p; ++m) {
        for (std::int64_t n = 0; n <= 3; ++n) {
          std::complex<double> direct = 0;
          for (std::int64_t x = 1; x < q; ++x) {
            if (x % p == 0) continue;
            const double chi = (legendre(big(x), prime) == -1 && n % 2 == 1) ? -1.0 : 1.0;
            direct += chi * e(m * x, p);
          }
          const TwistedSum closed = twisted_unit_sum(prime, k, big(m), n);
          const std::complex<double> value =
              std::holds_alternative<Rational>(closed)
                  ? std::complex<double>(std::get<Rational>(closed).to_double(), 0.0)
                  : std::get<GaussValue>(closed).to_complex();
          t.check(std::abs(value - direct) <= 1e-9,
                  "twisted p=" + std::to_string(p) + " k=" + std::to_string(k) +
                      " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
      }
    }
    // Legendre symbols summed over an interval of exponents.
    for (std::int64_t k = 0; k <= 6; ++k) {
      for (std::int64_t r : {std::int64_t{1}, std::int64_t{-1}, least_nonresidue(prime)}) {
        for (std::int64_t n1 = 0; n1 <= k; ++n1) {
          for (std::int64_t n2 = n1; n2 <= k; ++n2) {
            std::int64_t direct = 0;
            for (std::int64_t tau = k - n2; tau <= k - n1; ++tau) {
              std::int64_t term = 1;
              for (std::int64_t i = 0; i < k - tau; ++i) term *= legendre(big(r), prime);
              direct += term;
            }
            t.check(legendre_interval_sum(big(r), prime, n1, n2, k) == Rational(direct),
                    "interval p=" + std::to_string(p) + " r=" + std::to_string(r));
          }
        }
      }
    }
    // Half-power tails of a fixed parity.
    const Rational weight = Rational(1) - Rational(1) / Rational(p);
    for (std::int64_t n2 = 0; n2 <= 8; ++n2) {
      for (std::int64_t n1 = 0; n1 <= n2; ++n1) {
        for (std::int64_t scale = -4; scale <= 5; ++scale) {
          Rational direct;
          for (std::int64_t j = n1; j <= n2; ++j) {
            if ((scale - j) % 2 != 0) continue;
            direct += Rational(p).pow((scale - j) / 2) * weight;
          }
          const Parity parity = scale % 2 == 0 ? Parity::kEven : Parity::kOdd;
          t.check(half_power_tail_sum(prime, n1, n2, parity, scale) == direct,
                  "tail p=" + std::to_string(p) + " n1=" + std::to_string(n1) +
                      " n2=" + std::to_string(n2) + " scale=" + std::to_string(scale));
        }
      }
    }
  }
  return t;
}

Tally binary_forms() {
  Tally t;
  for (std::int64_t p : {3, 5, 7}) {
    const OddPrime prime(p);
    const std::int64_t n = least_nonresidue(prime);
    for (std::int64_t b1 = 0; b1 <= 3; ++b1) {
      for (std::int64_t a : {std::int64_t{1}, n}) {
        for (std::int64_t b0 : {std::int64_t{1}, n}) {
          const std::int64_t b = b0 * ipow64(p, b1);
          for (std::int64_t m1 = 0; m1 <= b1 + 2; ++m1) {
            const std::int64_t q = ipow64(p, m1 + 1);
            if (q > 10'000) continue;
            for (std::int64_t m0 : {std::int64_t{1}, std::int64_t{-1}, n, -n}) {
              const std::int64_t m = m0 * ipow64(p, m1);
              const Rational scaled =
                  binary_local_density(big(m), big(a), big(b), prime).value * Rational(q);
              t.check(scaled == Rational(static_cast<std::int64_t>(
                                    count_bruteforce_binary(big(m), big(a), big(b), q))),
                      tuple(p, a, b, 0, m, m1 + 1));
            }
          }
        }
      }
    }
  }
  return t;
}

Tally crt() {
  Tally t;
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<std::int64_t> coef(-60, 60);
  auto nonzero = [&]() {
    std::int64_t v = 0;
    while (v == 0) v = coef(rng);
    return v;
  };
  for (int i = 0; i < 20; ++i) {
    const std::int64_t a = nonzero(), b = nonzero(), c = nonzero(), m = coef(rng);
    const auto r = [&](std::int64_t n) { return testing::naive_count(m, a, b, c, n); };
    t.check(r(15) == r(3) * r(5) && r(21) == r(3) * r(7), tuple(0, a, b, c, m, 0));
  }
  return t;
}

Tally spot_values() {
  Tally t;
  const OddPrime p(3);
  struct Spot {
    std::int64_t m, a, b, c;
    Rational alpha;
  };
  for (const Spot& s : {Spot{1, 1, 1, 1, Rational(2, 3)}, Spot{1, 1, 3, 3, Rational(2)},
                        Spot{3, 1, 9, 9, Rational(0)}}) {
    // Brute force at k = m1 + 1 first, then the closed form.
    const std::int64_t k = s.m == 1 ? 1 : 2;
    const Rational counted =
        Rational(static_cast<std::int64_t>(testing::naive_count(s.m, s.a, s.b, s.c, ipow64(3, k)))) /
        Rational(ipow64(3, 2 * k));
    t.check(counted == s.alpha, tuple(3, s.a, s.b, s.c, s.m, k) + " brute " + counted.str());
    t.check(local_density(big(s.m), form(s.a, s.b, s.c), p).value == s.alpha,
            tuple(3, s.a, s.b, s.c, s.m, 0));
  }
  // alpha(0) is a limit: the counts must close in on 4/3 at the rate of the closed form.
  const Rational four_thirds(4, 3);
  for (std::int64_t k = 1; k <= 4; ++k) {
    const Rational ratio =
        Rational(static_cast<std::int64_t>(testing::naive_count(0, 1, 1, 1, ipow64(3, k)))) /
        Rational(ipow64(3, 2 * k));
    t.check((ratio - four_thirds).abs().to_double() <= std::pow(3.0, -(k / 2) + 1),
            "r_{3^" + std::to_string(k) + "}(0) / 3^2k = " + ratio.str());
  }
  t.check(local_density(0, form(1, 1, 1), p).value == four_thirds, "alpha_3(0, x^2+y^2+z^2)");
  return t;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Tally()> run;
  double time_limit_s;  // 0: none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed form vs brute force, nonzero m", closed_form_vs_brute, 120.0},
      {2, "stabilization at k = m1 + 2", stabilization, 0.0},
      {3, "brute = gauss-float = stratified", three_evaluators, 0.0},
      {4, "m = 0 counts and limit bound", zero_density_checks, 0.0},
      {5, "unramified primes up to 31", unramified, 0.0},
      {6, "u x^2 + p y^2 + u p z^2 family", berkovich_jagy, 0.0},
      {7, "exact Gauss sums vs direct summation", gauss_sums, 30.0},
      {8, "character-sum closed forms", character_sums, 0.0},
      {9, "binary forms", binary_forms, 0.0},
      {10, "CRT multiplicativity", crt, 0.0},
      {11, "worked spot values", spot_values, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool too_slow = c.time_limit_s > 0 && secs > c.time_limit_s;
    const bool pass = error.empty() && t.failures == 0 && t.cases > 0 && !too_slow;
    std::printf("%s %2d %-40s %7zu cases %8.2f s", pass ? "PASS" : "FAIL", c.id, c.name, t.cases,
                secs);
    if (!error.empty()) std::printf("  exception: %s", error.c_str());
    if (t.failures > 0) std::printf("  %zu failed, first: %s", t.failures, t.first_failure.c_str());
    if (too_slow) std::printf("  over the %.0f s limit", c.time_limit_s);
    std::printf("\n");
    if (!pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
