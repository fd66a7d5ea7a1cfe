#include "ldens/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "localdensity/charsums.hpp"
#include "localdensity/errors.hpp"
#include "localdensity/gauss.hpp"
#include "localdensity/localcount.hpp"

namespace ldens {

namespace {

using namespace localdensity;

// A grid point: a label for reporting and a check returning a failure detail.
struct Case {
  std::string label;
  std::function<std::optional<std::string>()> check;
};

struct Family {
  std::string name;
  std::vector<Case> cases;
};

std::int64_t ipow64(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 3; q <= limit; q += 2) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::string form_label(std::int64_t p, const BigInt& a, const BigInt& b, const BigInt& c,
                       const BigInt& m) {
  std::ostringstream os;
  os << "p=" << p << " Q=(" << a << "," << b << "," << c << ") m=" << m;
  return os.str();
}

std::optional<std::string> mismatch(const BigInt& lhs, const BigInt& rhs) {
  if (lhs == rhs) return std::nullopt;
  return lhs.get_str() + " != " + rhs.get_str();
}

// Forms a x^2 + b0 p^b1 y^2 + c0 p^c1 z^2 with units in {1, least nonresidue}.
struct GridForm {
  BigInt a, b, c;
  std::int64_t b1, c1;
};

std::vector<GridForm> unit_grid(std::int64_t p, std::int64_t c1_max) {
  const std::int64_t n = least_nonresidue(OddPrime(p));
  std::vector<GridForm> out;
  for (std::int64_t b1 = 0; b1 <= c1_max; ++b1) {
    for (std::int64_t c1 = b1; c1 <= c1_max; ++c1) {
      for (std::int64_t a : {std::int64_t{1}, n}) {
        for (std::int64_t b0 : {std::int64_t{1}, n}) {
          for (std::int64_t c0 : {std::int64_t{1}, n}) {
            out.push_back({big(a), big(b0 * ipow64(p, b1)), big(c0 * ipow64(p, c1)), b1, c1});
          }
        }
      }
    }
  }
  return out;
}

std::int64_t m1_limit(const VerifyOptions& o, std::int64_t natural) {
  return o.m1_max < 0 ? natural : std::min(natural, o.m1_max);
}

BigInt brute(const BigInt& m, const GridForm& g, std::int64_t n, std::int64_t cap) {
  return BigInt(static_cast<unsigned long>(count_bruteforce(m, DiagonalForm(g.a, g.b, g.c), n, cap)));
}

// Nonzero m against the unit grid; fn(p, form, m, m1) appends cases.
template <typename Fn>
void nonzero_grid(const VerifyOptions& o, Fn&& fn) {
  for (std::int64_t p : primes_up_to(o.p_max)) {
    const std::int64_t n = least_nonresidue(OddPrime(p));
    for (const GridForm& g : unit_grid(p, o.c1_max)) {
      for (std::int64_t m1 = 0; m1 <= m1_limit(o, g.c1 + 2); ++m1) {
        for (std::int64_t m0 : {std::int64_t{1}, std::int64_t{-1}, n, -n}) {
          fn(p, g, big(m0 * ipow64(p, m1)), m1);
        }
      }
    }
  }
}

Family closed_form_family(const VerifyOptions& o) {
  Family f{"closed-form", {}};
  nonzero_grid(o, [&](std::int64_t p, const GridForm& g, const BigInt& m, std::int64_t m1) {
    const std::int64_t k = m1 + 1;
    if (ipow64(p, k) > o.cap) return;
    f.cases.push_back({form_label(p, g.a, g.b, g.c, m), [&o, p, g, m, k]() {
                         const OddPrime prime(p);
                         const Rational alpha = o.density(m, DiagonalForm(g.a, g.b, g.c), prime);
                         const Rational scaled = alpha * prime_power(prime, 2 * k);
                         if (!scaled.is_integer()) return std::optional<std::string>(
                             "alpha p^2k = " + scaled.str() + " is not an integer");
                         return mismatch(scaled.to_integer(), brute(m, g, ipow64(p, k), o.cap));
                       }});
  });
  return f;
}

Family stabilization_family(const VerifyOptions& o) {
  Family f{"stabilization", {}};
  nonzero_grid(o, [&](std::int64_t p, const GridForm& g, const BigInt& m, std::int64_t m1) {
    if (ipow64(p, m1 + 2) > o.cap) return;
    f.cases.push_back({form_label(p, g.a, g.b, g.c, m), [&o, p, g, m, m1]() {
                         return mismatch(brute(m, g, ipow64(p, m1 + 2), o.cap),
                                         p * p * brute(m, g, ipow64(p, m1 + 1), o.cap));
                       }});
  });
  return f;
}

Family three_evaluator_family(const VerifyOptions& o) {
  Family f{"three-evaluator", {}};
  const std::int64_t limit = std::min<std::int64_t>(2401, o.cap);
  nonzero_grid(o, [&](std::int64_t p, const GridForm& g, const BigInt& m, std::int64_t m1) {
    const std::int64_t k = m1 + 1;
    if (ipow64(p, k) > limit) return;
    f.cases.push_back({form_label(p, g.a, g.b, g.c, m), [&o, p, g, m, k]() {
                         const OddPrime prime(p);
                         const DiagonalForm q(g.a, g.b, g.c);
                         const BigInt exact = count_stratified(m, q, prime, k);
                         const BigInt b = brute(m, g, ipow64(p, k), o.cap);
                         if (auto bad = mismatch(exact, b)) return bad;
                         const FloatCount fc = count_via_gauss_float(m, q, prime, k);
                         if (fc.relative_residual >= 1e-3) {
                           return std::optional<std::string>("float residual " +
                                                             std::to_string(fc.relative_residual));
                         }
                         return mismatch(BigInt(static_cast<unsigned long>(fc.value)), b);
                       }});
  });
  return f;
}

Family zero_family(const VerifyOptions& o) {
  Family f{"zero", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 7))) {
    for (const GridForm& g : unit_grid(p, std::min<std::int64_t>(o.c1_max, 2))) {
      for (std::int64_t k = g.c1 + 1; k <= 4 && ipow64(p, k) <= o.cap; ++k) {
        f.cases.push_back({form_label(p, g.a, g.b, g.c, 0) + " k=" + std::to_string(k),
                           [&o, p, g, k]() -> std::optional<std::string> {
                             const OddPrime prime(p);
                             const DiagonalForm q(g.a, g.b, g.c);
                             const BigInt exact = count_zero_stratified(q, prime, k);
                             if (auto bad = mismatch(exact, brute(0, g, ipow64(p, k), o.cap))) {
                               return bad;
                             }
                             const Rational alpha = o.density(0, q, prime);
                             const double gap =
                                 (Rational(exact) * prime_power(prime, -2 * k) - alpha).abs().to_double();
                             const double bound = std::pow(
                                 static_cast<double>(p),
                                 -(k / 2) + static_cast<double>(g.b1 + g.c1) / 2 + 1);
                             if (gap > bound) {
                               return "gap " + std::to_string(gap) + " > " + std::to_string(bound);
                             }
                             return std::nullopt;
                           }});
      }
    }
  }
  return f;
}

Family unramified_family(const VerifyOptions& o) {
  Family f{"unramified", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 31))) {
    // One case per (a, b): the inner loop covers every c and m.
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        f.cases.push_back({"p=" + std::to_string(p) + " a=" + std::to_string(a) +
                               " b=" + std::to_string(b),
                           [&o, p, a, b]() -> std::optional<std::string> {
                             const OddPrime prime(p);
                             for (std::int64_t c = 1; c < p; ++c) {
                               const DiagonalForm q(big(a), big(b), big(c));
                               for (std::int64_t m = 1; m < p; ++m) {
                                 const Rational lhs = o.density(big(m), q, prime);
                                 const Rational rhs = unramified_density(big(m), q, prime);
                                 if (lhs != rhs) {
                                   return "c=" + std::to_string(c) + " m=" + std::to_string(m) +
                                          ": " + lhs.str() + " != " + rhs.str();
                                 }
                               }
                             }
                             return std::nullopt;
                           }});
      }
    }
  }
  return f;
}

Family bj_family(const VerifyOptions& o) {
  Family f{"berkovich-jagy", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 11))) {
    const OddPrime prime(p);
    for (std::int64_t u = 1; u < p; ++u) {
      if (legendre(big(-u), prime) != -1) continue;
      for (std::int64_t m0 = 1; m0 < p; ++m0) {
        for (std::int64_t m1 = 0; m1 <= m1_limit(o, 4); ++m1) {
          const BigInt m = big(m0 * ipow64(p, m1));
          f.cases.push_back({form_label(p, big(u), big(p), big(u * p), m), [&o, p, u, m]() {
                               const OddPrime q(p);
                               const Rational lhs =
                                   o.density(m, DiagonalForm(big(u), big(p), big(u * p)), q);
                               const Rational rhs = bj_density(big(u), m, q);
                               return lhs == rhs ? std::nullopt
                                                 : std::optional<std::string>(lhs.str() + " != " +
                                                                              rhs.str());
                             }});
        }
      }
    }
  }
  return f;
}

Family binary_family(const VerifyOptions& o) {
  Family f{"binary", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 7))) {
    const std::int64_t n = least_nonresidue(OddPrime(p));
    for (std::int64_t b1 = 0; b1 <= std::min<std::int64_t>(o.c1_max, 3); ++b1) {
      for (std::int64_t a : {std::int64_t{1}, n}) {
        for (std::int64_t b0 : {std::int64_t{1}, n}) {
          const std::int64_t b = b0 * ipow64(p, b1);
          for (std::int64_t m1 = 0; m1 <= m1_limit(o, b1 + 2); ++m1) {
            const std::int64_t k = m1 + 1;
            if (ipow64(p, k) > o.cap) continue;
            for (std::int64_t m0 : {std::int64_t{1}, -n}) {
              const BigInt m = big(m0 * ipow64(p, m1));
              f.cases.push_back({"p=" + std::to_string(p) + " Q=(" + std::to_string(a) + "," +
                                     std::to_string(b) + ") m=" + m.get_str(),
                                 [&o, p, a, b, m, k]() {
                                   const OddPrime prime(p);
                                   const Rational scaled =
                                       binary_local_density(m, big(a), big(b), prime).value *
                                       prime_power(prime, k);
                                   const BigInt count(static_cast<unsigned long>(
                                       count_bruteforce_binary(m, big(a), big(b), ipow64(p, k), o.cap)));
                                   return scaled == Rational(count)
                                              ? std::nullopt
                                              : std::optional<std::string>(scaled.str() + " != " +
                                                                           count.get_str());
                                 }});
            }
          }
        }
      }
    }
  }
  return f;
}

Family crt_family(const VerifyOptions& o) {
  Family f{"crt", {}};
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::int64_t> coef(-40, 40);
  auto nonzero = [&]() {
    std::int64_t v = 0;
    while (v == 0) v = coef(rng);
    return v;
  };
  for (int i = 0; i < 20; ++i) {
    const GridForm g{big(nonzero()), big(nonzero()), big(nonzero()), 0, 0};
    const BigInt m = big(coef(rng));
    f.cases.push_back({form_label(0, g.a, g.b, g.c, m), [&o, g, m]() -> std::optional<std::string> {
                         if (auto bad = mismatch(brute(m, g, 15, o.cap),
                                                 brute(m, g, 3, o.cap) * brute(m, g, 5, o.cap))) {
                           return "n=15: " + *bad;
                         }
                         if (auto bad = mismatch(brute(m, g, 21, o.cap),
                                                 brute(m, g, 3, o.cap) * brute(m, g, 7, o.cap))) {
                           return "n=21: " + *bad;
                         }
                         return std::nullopt;
                       }});
  }
  return f;
}

Family gauss_family(const VerifyOptions& o) {
  Family f{"gauss", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 7))) {
    for (std::int64_t k = 1; ipow64(p, k) <= std::min<std::int64_t>(2401, o.cap); ++k) {
      const std::int64_t q = ipow64(p, k);
      f.cases.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(k),
                         [p, k, q]() -> std::optional<std::string> {
                           const OddPrime prime(p);
                           const double tol = 1e-6 * std::pow(static_cast<double>(p), k / 2.0);
                           for (std::int64_t a = 0; a < q; ++a) {
                             const auto exact = gauss_sum_exact(big(a), prime, k).to_complex();
                             const auto direct = gauss_sum_float(big(a), static_cast<std::uint64_t>(q));
                             if (std::abs(exact - direct) > tol) {
                               return "a=" + std::to_string(a);
                             }
                           }
                           return std::nullopt;
                         }});
    }
  }
  return f;
}

Family charsum_family(const VerifyOptions& o) {
  Family f{"character-sums", {}};
  for (std::int64_t p : primes_up_to(std::min<std::int64_t>(o.p_max, 7))) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      f.cases.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(k),
                         [p, k]() -> std::optional<std::string> {
                           const OddPrime prime(p);
                           const std::int64_t q = ipow64(p, k);
                           // Legendre interval sums against the direct definition.
                           for (std::int64_t r : {std::int64_t{1}, least_nonresidue(prime)}) {
                             for (std::int64_t n1 = 0; n1 <= k; ++n1) {
                               for (std::int64_t n2 = n1; n2 <= k; ++n2) {
                                 Rational direct;
                                 for (std::int64_t j = n1; j <= n2; ++j) {
                                   direct += Rational(legendre_power(big(r), prime, j));
                                 }
                                 if (legendre_interval_sum(big(r), prime, n1, n2, k) != direct) {
                                   return "interval r=" + std::to_string(r);
                                 }
                               }
                             }
                           }
                           for (std::int64_t n1 = 0; n1 <= 2 * k; ++n1) {
                             for (std::int64_t n2 = n1; n2 <= 2 * k; ++n2) {
                               for (const Parity parity : {Parity::kEven, Parity::kOdd}) {
                                 const std::int64_t scale = parity == Parity::kEven ? 2 * k : 2 * k + 1;
                                 Rational direct;
                                 for (std::int64_t j = n1; j <= n2; ++j) {
                                   if ((j % 2 == 0) != (parity == Parity::kEven)) continue;
                                   direct += prime_power_half(prime, scale - j) *
                                             (Rational(1) - prime_power(prime, -1));
                                 }
                                 if (half_power_tail_sum(prime, n1, n2, parity, scale) != direct) {
                                   return "tail n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
                                 }
                               }
                             }
                           }
                           // Sum over units of e(mt/q) equals the geometric closed form.
                           for (std::int64_t m = 0; m < q; ++m) {
                             std::complex<double> direct;
                             for (std::int64_t t = 0; t < q; ++t) {
                               direct += unit_root(static_cast<std::uint64_t>((m * t) % q),
                                                   static_cast<std::uint64_t>(q));
                             }
                             if (std::abs(direct - static_cast<double>(geometric_exp_sum(big(m), q))) >
                                 1e-9 * static_cast<double>(q)) {
                               return "geometric m=" + std::to_string(m);
                             }
                           }
                           return std::nullopt;
                         }});
    }
  }
  return f;
}

FamilyReport run_family(const Family& family, unsigned threads) {
  std::vector<std::optional<std::string>> outcome(family.cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < family.cases.size(); i = next++) {
      try {
        outcome[i] = family.cases[i].check();
      } catch (const std::exception& e) {
        outcome[i] = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  FamilyReport report{family.name, 0, 0, {}};
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i]) {
      ++report.failed;
      report.failures.push_back(family.cases[i].label + ": " + *outcome[i]);
    } else {
      ++report.passed;
    }
  }
  return report;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyReport& f) { return f.failed == 0; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyOptions o = options;
  if (!o.density) {
    o.density = [](const BigInt& m, const DiagonalForm& q, const OddPrime& p) {
      return local_density(m, q, p).value;
    };
  }
  unsigned threads = o.threads != 0 ? o.threads : std::max(1U, std::thread::hardware_concurrency());

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  for (const Family& family :
       {closed_form_family(o), stabilization_family(o), three_evaluator_family(o), zero_family(o),
        unramified_family(o), bj_family(o), binary_family(o), crt_family(o), gauss_family(o),
        charsum_family(o)}) {
    report.families.push_back(run_family(family, threads));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Rational faulty_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p) {
  const DensityResult r = local_density(m, form, p);
  if (r.branch != DensityBranch::kM1LessB1Even) return r.value;
  const LocalizedForm& f = *r.form;
  const PAdicSplit& s = *r.m_split;
  return prime_power(p, f.common_power + s.exponent / 2) * (1 - legendre(BigInt(f.a * s.unit), p));
}

}  // namespace ldens
