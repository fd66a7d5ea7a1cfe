#pragma once

// Local representation numbers r_n(m, Q) = #{v in (Z/nZ)^3 : Q(v) = m (mod n)}
// computed three independent ways: brute-force counting, the Gauss-sum
// expansion evaluated in floating point, and the exact stratum-by-stratum
// assembly at a prime power.

#include <array>
#include <cstdint>
#include <vector>

#include "localdensity/ntkernel.hpp"
#include "localdensity/rational.hpp"

namespace localdensity {

/// Q(x, y, z) = a x^2 + b y^2 + c z^2 with nonzero integer coefficients.
class DiagonalForm {
 public:
  DiagonalForm(BigInt a, BigInt b, BigInt c);

  const BigInt& a() const { return coefficients_[0]; }
  const BigInt& b() const { return coefficients_[1]; }
  const BigInt& c() const { return coefficients_[2]; }
  const std::array<BigInt, 3>& coefficients() const { return coefficients_; }

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  std::array<BigInt, 3> coefficients_;
};

/// s_{k,tau}: the part of the Gauss-sum expansion of r_{p^k} coming from
/// t = t0 p^tau with t0 a unit.
struct StratumTerm {
  std::int64_t k = 0;
  std::int64_t tau = 0;
  Rational value;
};

inline constexpr std::int64_t kDefaultBruteForceCap = 10'000;
inline constexpr std::int64_t kDefaultGaussFloatCountCap = 100'000;

/// r_n(m, Q) by square histograms: O(n^2) time, O(n) space.
/// Throws ResourceLimitError when n > cap.
std::uint64_t count_bruteforce(const BigInt& m, const DiagonalForm& form, std::int64_t n,
                               std::int64_t cap = kDefaultBruteForceCap);

/// #{(x, y) in (Z/nZ)^2 : a x^2 + b y^2 = m (mod n)}.
std::uint64_t count_bruteforce_binary(const BigInt& m, const BigInt& a, const BigInt& b,
                                      std::int64_t n, std::int64_t cap = kDefaultBruteForceCap);

struct FloatCount {
  std::uint64_t value = 0;
  /// |rounded - computed| / p^(2k).
  double relative_residual = 0.0;
};

/// r_{p^k}(m, Q) = p^{2k} + p^{-k} sum_{t=1}^{p^k-1} e(-mt/p^k) G(at) G(bt) G(ct),
/// with exact Gauss values converted to complex doubles.
/// Throws ResourceLimitError when p^k > cap and NumericalInstabilityError when
/// the result cannot be rounded with confidence.
FloatCount count_via_gauss_float(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                                 std::int64_t k, std::int64_t cap = kDefaultGaussFloatCountCap);

/// True when p does not divide a and v_p(b) <= v_p(c).
bool is_normalized_at(const DiagonalForm& form, const OddPrime& p);

/// The individual strata s_{k,tau}, tau = 0..k-1, for nonzero m.
/// Same preconditions as count_stratified.
std::vector<StratumTerm> stratum_terms(const BigInt& m, const DiagonalForm& form,
                                       const OddPrime& p, std::int64_t k);

/// Exact r_{p^k}(m, Q) for nonzero m, assembled from the summed strata.
/// Requires is_normalized_at(form, p) and k >= v_p(m) + 1.
BigInt count_stratified(const BigInt& m, const DiagonalForm& form, const OddPrime& p,
                        std::int64_t k);

/// Exact r_{p^k}(0, Q). Requires is_normalized_at(form, p) and k >= v_p(c) + 1.
BigInt count_zero_stratified(const DiagonalForm& form, const OddPrime& p, std::int64_t k);

/// r_{p^k}(m, Q) by the exact evaluator when its preconditions hold for some
/// reordering of the coefficients, otherwise by brute force (subject to cap).
BigInt count_local(const BigInt& m, const DiagonalForm& form, const OddPrime& p, std::int64_t k,
                   std::int64_t cap = kDefaultBruteForceCap);

}  // namespace localdensity
