#include "localdensity/density.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "localdensity/errors.hpp"

namespace localdensity {

namespace {

constexpr std::array<std::pair<DensityBranch, std::string_view>, 17> kBranchTags{{
    {DensityBranch::kM1LessB1Even, "m1<b1/even"},
    {DensityBranch::kM1LessB1Odd, "m1<b1/odd"},
    {DensityBranch::kMiddleB1Even, "b1<=m1<c1/b1-even"},
    {DensityBranch::kMiddleB1Odd, "b1<=m1<c1/b1-odd"},
    {DensityBranch::kHighB1EvenC1EvenM1Even, "m1>=c1/b1-even/c1-even/m1-even"},
    {DensityBranch::kHighB1EvenC1EvenM1Odd, "m1>=c1/b1-even/c1-even/m1-odd"},
    {DensityBranch::kHighB1EvenC1OddM1Even, "m1>=c1/b1-even/c1-odd/m1-even"},
    {DensityBranch::kHighB1EvenC1OddM1Odd, "m1>=c1/b1-even/c1-odd/m1-odd"},
    {DensityBranch::kHighB1OddC1EvenM1Even, "m1>=c1/b1-odd/c1-even/m1-even"},
    {DensityBranch::kHighB1OddC1EvenM1Odd, "m1>=c1/b1-odd/c1-even/m1-odd"},
    {DensityBranch::kHighB1OddC1OddM1Even, "m1>=c1/b1-odd/c1-odd/m1-even"},
    {DensityBranch::kHighB1OddC1OddM1Odd, "m1>=c1/b1-odd/c1-odd/m1-odd"},
    {DensityBranch::kZeroB1EvenC1Even, "zero/b1-even-c1-even"},
    {DensityBranch::kZeroB1EvenC1Odd, "zero/b1-even-c1-odd"},
    {DensityBranch::kZeroB1OddC1Even, "zero/b1-odd-c1-even"},
    {DensityBranch::kZeroB1OddC1Odd, "zero/b1-odd-c1-odd"},
    {DensityBranch::kReducedValuationTooSmall, "reduced/valuation-too-small"},
}};

struct Evaluation {
  Rational value;
  DensityBranch branch;
};

bool even(std::int64_t n) { return n % 2 == 0; }

// Valuation data of a form with a unit leading coefficient. A binary form is
// the c1 = infinity case and sets has_c to false.
struct Local {
  const OddPrime& p;
  const BigInt& a;
  const BigInt& b0;
  std::int64_t b1;
  const BigInt* c0;
  std::int64_t c1;
  bool has_c;

  int sym(const BigInt& x) const { return legendre(x, p); }
};

// Nonzero m = m0 p^m1 against a x^2 + b0 p^b1 y^2 + c0 p^c1 z^2.
Evaluation nonzero_density(const Local& f, const BigInt& m0, std::int64_t m1) {
  const OddPrime& p = f.p;
  const Rational inv = prime_power(p, -1);
  const Rational one(1);
  const std::int64_t b1 = f.b1;

  if (m1 < b1) {
    if (!even(m1)) return {Rational(0), DensityBranch::kM1LessB1Odd};
    return {prime_power(p, m1 / 2) * (1 + f.sym(BigInt(f.a * m0))), DensityBranch::kM1LessB1Even};
  }

  if (!f.has_c || m1 < f.c1) {
    if (even(b1)) {
      const int s = f.sym(BigInt(-f.a * f.b0));
      const Rational sign_m1 = even(m1) ? one : -one;
      const Rational spread = Rational(m1 - b1) / 2;
      const Rational value =
          prime_power(p, b1 / 2) *
          (one - inv * legendre_power(BigInt(-f.a * f.b0), p, m1 + 1) +
           (one - inv) * (spread + (sign_m1 - 1) / 4 + Rational(s) * (spread + (one - sign_m1) / 4)));
      return {value, DensityBranch::kMiddleB1Even};
    }
    const int s = legendre_power(f.a, p, m1 + 1) * legendre_power(f.b0, p, m1) * f.sym(m0);
    return {prime_power(p, (b1 - 1) / 2) * (1 + s), DensityBranch::kMiddleB1Odd};
  }

  const BigInt& c0 = *f.c0;
  const std::int64_t c1 = f.c1;
  if (even(b1)) {
    const Rational lead = prime_power(p, b1 / 2);
    const int s = f.sym(BigInt(-f.a * f.b0));
    if (even(c1)) {
      const Rational spread = (one - inv) * Rational(c1 - b1, 2) * (1 + s);
      if (even(m1)) {
        const int t = f.sym(BigInt(-f.a * f.b0 * c0 * m0));
        return {lead * (one + inv + prime_power_half(p, -m1 + c1 - 2) * (t - 1) + spread),
                DensityBranch::kHighB1EvenC1EvenM1Even};
      }
      return {lead * ((one + inv) * (one - prime_power_half(p, -(m1 + 1) + c1)) + spread),
              DensityBranch::kHighB1EvenC1EvenM1Odd};
    }
    const Rational spread =
        (one - inv) * (Rational(c1 - b1 - 1, 2) + Rational(s) * Rational(c1 - b1 + 1, 2));
    if (even(m1)) {
      return {lead * (one - prime_power_half(p, -m1 + c1 - 1) * s * (one + inv) + inv * s + spread),
              DensityBranch::kHighB1EvenC1OddM1Even};
    }
    const int t = f.sym(BigInt(c0 * m0));
    return {lead * (one + prime_power_half(p, -(m1 + 1) + c1 - 1) * (t - s) + inv * s + spread),
            DensityBranch::kHighB1EvenC1OddM1Odd};
  }

  const Rational lead = prime_power(p, (b1 - 1) / 2);
  if (even(c1)) {
    const int s = f.sym(BigInt(-f.a * c0));
    if (even(m1)) {
      return {lead * (one + s - prime_power_half(p, -m1 + c1) * (one + inv) * s),
              DensityBranch::kHighB1OddC1EvenM1Even};
    }
    const int t = f.sym(BigInt(f.b0 * m0));
    return {lead * (one + s + prime_power_half(p, -(m1 + 1) + c1) * (t - s)),
            DensityBranch::kHighB1OddC1EvenM1Odd};
  }
  const int s = f.sym(BigInt(-f.b0 * c0));
  if (even(m1)) {
    const int t = f.sym(BigInt(f.a * m0));
    return {lead * (one + s + prime_power_half(p, -m1 + c1 - 1) * (t - s)),
            DensityBranch::kHighB1OddC1OddM1Even};
  }
  return {lead * (one + s - prime_power_half(p, -m1 + c1) * (one + inv) * s),
          DensityBranch::kHighB1OddC1OddM1Odd};
}

Evaluation zero_density(const Local& f) {
  const OddPrime& p = f.p;
  const Rational inv = prime_power(p, -1);
  const Rational one(1);
  const std::int64_t b1 = f.b1;
  const std::int64_t c1 = f.c1;
  const BigInt& c0 = *f.c0;
  if (even(b1)) {
    const Rational lead = prime_power(p, b1 / 2);
    const int s = f.sym(BigInt(-f.a * f.b0));
    if (even(c1)) {
      return {lead * (one + inv + (one - inv) * Rational(c1 - b1, 2) * (1 + s)),
              DensityBranch::kZeroB1EvenC1Even};
    }
    return {lead * (one + inv * s +
                    (one - inv) * (Rational(c1 - b1 - 1, 2) + Rational(s) * Rational(c1 - b1 + 1, 2))),
            DensityBranch::kZeroB1EvenC1Odd};
  }
  const Rational lead = prime_power(p, (b1 - 1) / 2);
  if (even(c1)) {
    return {lead * (1 + f.sym(BigInt(-f.a * c0))), DensityBranch::kZeroB1OddC1Even};
  }
  return {lead * (1 + f.sym(BigInt(-f.b0 * c0))), DensityBranch::kZeroB1OddC1Odd};
}

// value >= 0 and its denominator is a power of p.
void check_density_value(const Rational& value, const OddPrime& p) {
  if (value.sign() < 0) {
    throw std::logic_error("negative local density " + value.str());
  }
  BigInt den = value.denominator();
  BigInt pz(static_cast<long>(p.value()));
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  if (den != 1) {
    throw std::logic_error("local density " + value.str() + " has a denominator prime to p");
  }
}

// Shared tail of the ternary and binary evaluators: strip the common power of
// p from m, or report that no solution exists when m has too little of it.
template <typename Evaluate>
DensityResult reduce_and_evaluate(const BigInt& m, const OddPrime& p, std::int64_t e,
                                  std::optional<LocalizedForm> form, Evaluate&& evaluate) {
  std::optional<PAdicSplit> m_split;
  Evaluation inner;
  if (m == 0) {
    inner = evaluate(nullptr);
  } else {
    const PAdicSplit split = padic_split(m, p);
    if (split.exponent < e) {
      return DensityResult{Rational(0), DensityBranch::kReducedValuationTooSmall, std::move(form),
                           std::nullopt};
    }
    m_split = PAdicSplit{split.unit, static_cast<int>(split.exponent - e), p};
    inner = evaluate(&*m_split);
  }
  Rational value = prime_power(p, e) * inner.value;
  check_density_value(value, p);
  return DensityResult{std::move(value), inner.branch, std::move(form), std::move(m_split)};
}

}  // namespace

std::string_view to_string(DensityBranch branch) {
  for (const auto& [b, tag] : kBranchTags) {
    if (b == branch) return tag;
  }
  throw std::logic_error("unknown density branch");
}

std::optional<DensityBranch> parse_density_branch(std::string_view tag) {
  for (const auto& [b, t] : kBranchTags) {
    if (t == tag) return b;
  }
  return std::nullopt;
}

DiagonalForm LocalizedForm::reduced() const {
  return DiagonalForm(a, b0 * ipow(prime.value(), static_cast<unsigned>(b1)),
                      c0 * ipow(prime.value(), static_cast<unsigned>(c1)));
}

LocalizedForm normalize(const DiagonalForm& form, const OddPrime& p) {
  std::array<PAdicSplit, 3> splits{padic_split(form.a(), p), padic_split(form.b(), p),
                                   padic_split(form.c(), p)};
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return splits[l].exponent < splits[r].exponent; });
  const std::int64_t e = splits[order[0]].exponent;
  LocalizedForm out{p, splits[order[0]].unit, splits[order[1]].unit, splits[order[1]].exponent - e,
                    splits[order[2]].unit, splits[order[2]].exponent - e, e, order};
  return out;
}

DensityResult local_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p) {
  LocalizedForm local = normalize(form, p);
  const Local f{p, local.a, local.b0, local.b1, &local.c0, local.c1, true};
  const std::int64_t e = local.common_power;
  // f refers into local, so the result gets a copy.
  return reduce_and_evaluate(m, p, e, local, [&](const PAdicSplit* split) {
    return split == nullptr ? zero_density(f) : nonzero_density(f, split->unit, split->exponent);
  });
}

DensityResult binary_local_density(const BigInt& m, const BigInt& a, const BigInt& b,
                                   const OddPrime& p) {
  if (a == 0 || b == 0) {
    throw DomainError("binary form coefficients must be nonzero");
  }
  if (m == 0) {
    throw PreconditionError("binary density at m = 0 is unbounded");
  }
  PAdicSplit first = padic_split(a, p);
  PAdicSplit second = padic_split(b, p);
  if (second.exponent < first.exponent) std::swap(first, second);
  const std::int64_t e = first.exponent;
  const Local f{p, first.unit, second.unit, second.exponent - e, nullptr, 0, false};
  return reduce_and_evaluate(m, p, e, std::nullopt, [&](const PAdicSplit* split) {
    return nonzero_density(f, split->unit, split->exponent);
  });
}

Rational unramified_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p) {
  const BigInt product = form.a() * form.b() * form.c() * m;
  const int s = legendre(BigInt(-product), p);
  if (s == 0) {
    throw PreconditionError("unramified density needs p not dividing abcm");
  }
  return Rational(1) + prime_power(p, -1) * s;
}

Rational bj_density(const BigInt& u, const BigInt& m, const OddPrime& p) {
  if (legendre(BigInt(-u), p) != -1) {
    throw PreconditionError("bj_density needs (-u|p) = -1");
  }
  if (m == 0) {
    throw PreconditionError("bj_density needs m != 0");
  }
  const PAdicSplit split = padic_split(m, p);
  const std::int64_t m1 = split.exponent;
  if (m1 % 2 == 0) {
    return prime_power(p, -m1 / 2) * (1 - legendre(BigInt(-split.unit), p));
  }
  return prime_power(p, (-m1 + 1) / 2) * (Rational(1) + prime_power(p, -1));
}

Rational density_from_counts(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                             std::int64_t cap) {
  if (m == 0) {
    throw PreconditionError("density_from_counts needs m != 0");
  }
  const std::int64_t k = valuation(m, p) + 1;
  const BigInt n = ipow(p.value(), static_cast<unsigned>(k));
  if (n > cap) {
    throw ResourceLimitError("p^(m1+1) = " + n.get_str() + " exceeds brute-force cap " +
                             std::to_string(cap));
  }
  const std::uint64_t count = count_bruteforce(m, form, n.get_si(), cap);
  return Rational(BigInt(static_cast<unsigned long>(count))) / prime_power(p, 2 * k);
}

}  // namespace localdensity
