#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "localdensity/density.hpp"

namespace ldens {

using localdensity::BigInt;
using localdensity::DiagonalForm;
using localdensity::OddPrime;
using localdensity::Rational;

using DensityFn = std::function<Rational(const BigInt& m, const DiagonalForm& form, const OddPrime& p)>;

struct VerifyOptions {
  std::int64_t p_max = 13;
  std::int64_t c1_max = 3;
  /// Negative: no cap beyond c1 + 2.
  std::int64_t m1_max = -1;
  std::int64_t cap = 10'000;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Evaluator under test; defaults to local_density.
  DensityFn density;
};

struct FamilyReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// "tuple: detail", in grid order.
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::vector<FamilyReport> families;
  double seconds = 0.0;

  bool ok() const;
};

VerifyReport run_verify(const VerifyOptions& options);

/// local_density with the sign of the Legendre symbol flipped in the
/// m1 < b1, m1 even branch. Used to check that verify notices.
Rational faulty_density(const BigInt& m, const DiagonalForm& form, const OddPrime& p);

}  // namespace ldens
