#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldens {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitMismatch = 4;

/// Runs `ldens` with args (program name excluded). Data goes to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldens
