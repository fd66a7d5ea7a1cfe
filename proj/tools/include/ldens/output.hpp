#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "localdensity/rational.hpp"

namespace ldens {

using localdensity::BigInt;
using localdensity::Rational;

/// One density evaluation as printed by `ldens density`.
struct OutputRecord {
  BigInt a;
  BigInt b;
  BigInt c;
  std::int64_t p = 0;
  BigInt m;
  Rational density;
  std::string branch;
  /// (k, r_{p^k}(m, Q)) pairs, present with --show-counts.
  std::vector<std::pair<std::int64_t, BigInt>> counts;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Single-line JSON object. Integers that fit in 64 bits are JSON numbers,
/// larger ones are decimal strings.
std::string to_json(const OutputRecord& record);
OutputRecord from_json(const std::string& text);

/// "alpha = 2/3, branch = m1>=c1/b1-even/c1-even/m1-even"
std::string to_text(const OutputRecord& record);

}  // namespace ldens
