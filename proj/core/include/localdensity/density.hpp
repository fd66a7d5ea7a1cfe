#pragma once

// Closed-form p-adic local densities alpha_p(m, Q) of diagonal ternary forms at
// odd primes, the binary-form specialization, and the classical special cases
// used to cross-check them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "localdensity/localcount.hpp"
#include "localdensity/ntkernel.hpp"
#include "localdensity/rational.hpp"

namespace localdensity {

/// Q = p^e (a x^2 + b0 p^b1 y^2 + c0 p^c1 z^2) after reordering the variables.
///
/// permutation[i] is the index in the original form of the coefficient that
/// now occupies slot i (0 = a, 1 = b, 2 = c).
struct LocalizedForm {
  OddPrime prime;
  BigInt a;
  BigInt b0;
  std::int64_t b1 = 0;
  BigInt c0;
  std::int64_t c1 = 0;
  std::int64_t common_power = 0;
  std::array<int, 3> permutation{0, 1, 2};

  /// a x^2 + b0 p^b1 y^2 + c0 p^c1 z^2, i.e. the form with p^e removed.
  DiagonalForm reduced() const;
};

/// Which case of the closed form produced a density value.
enum class DensityBranch {
  kM1LessB1Even,
  kM1LessB1Odd,
  kMiddleB1Even,
  kMiddleB1Odd,
  kHighB1EvenC1EvenM1Even,
  kHighB1EvenC1EvenM1Odd,
  kHighB1EvenC1OddM1Even,
  kHighB1EvenC1OddM1Odd,
  kHighB1OddC1EvenM1Even,
  kHighB1OddC1EvenM1Odd,
  kHighB1OddC1OddM1Even,
  kHighB1OddC1OddM1Odd,
  kZeroB1EvenC1Even,
  kZeroB1EvenC1Odd,
  kZeroB1OddC1Even,
  kZeroB1OddC1Odd,
  kReducedValuationTooSmall,
};

inline constexpr std::array kAllDensityBranches = {
    DensityBranch::kM1LessB1Even,           DensityBranch::kM1LessB1Odd,
    DensityBranch::kMiddleB1Even,           DensityBranch::kMiddleB1Odd,
    DensityBranch::kHighB1EvenC1EvenM1Even, DensityBranch::kHighB1EvenC1EvenM1Odd,
    DensityBranch::kHighB1EvenC1OddM1Even,  DensityBranch::kHighB1EvenC1OddM1Odd,
    DensityBranch::kHighB1OddC1EvenM1Even,  DensityBranch::kHighB1OddC1EvenM1Odd,
    DensityBranch::kHighB1OddC1OddM1Even,   DensityBranch::kHighB1OddC1OddM1Odd,
    DensityBranch::kZeroB1EvenC1Even,       DensityBranch::kZeroB1EvenC1Odd,
    DensityBranch::kZeroB1OddC1Even,        DensityBranch::kZeroB1OddC1Odd,
    DensityBranch::kReducedValuationTooSmall,
};

/// Stable tag such as "m1<b1/even" or "m1>=c1/b1-even/c1-odd/m1-even".
std::string_view to_string(DensityBranch branch);
std::optional<DensityBranch> parse_density_branch(std::string_view tag);

struct DensityResult {
  Rational value;
  DensityBranch branch;
  /// Absent for binary forms.
  std::optional<LocalizedForm> form;
  /// Split of m after removing the common power of p; absent for m = 0 and
  /// for the valuation-too-small reduction.
  std::optional<PAdicSplit> m_split;
};

/// Splits each coefficient at p, pulls out the common power, and stably sorts
/// the remaining valuations ascending.
LocalizedForm normalize(const DiagonalForm& form, const OddPrime& p);

/// alpha_p(m, Q), exact, with the branch that produced it.
DensityResult local_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p);

/// alpha_p(m, a x^2 + b y^2) = lim r_{p^k}(m) / p^k, for m != 0.
DensityResult binary_local_density(const BigInt& m, const BigInt& a, const BigInt& b,
                                   const OddPrime& p);

/// 1 + (1/p) (-abcm | p); requires p not dividing abcm.
Rational unramified_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p);

/// Density of u x^2 + p y^2 + u p z^2 when (-u|p) = -1, for m != 0.
Rational bj_density(const BigInt& u, const BigInt& m, const OddPrime& p);

/// r_{p^(m1+1)}(m, Q) / p^(2(m1+1)) by brute-force counting, for m != 0.
Rational density_from_counts(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                             std::int64_t cap = kDefaultBruteForceCap);

}  // namespace localdensity
