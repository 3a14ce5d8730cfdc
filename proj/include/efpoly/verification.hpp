#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace efpoly {

struct CheckOutcome {
  std::string name;
  std::string title;
  bool passed = false;
  /// key: value lines for the report, in order.
  std::vector<std::pair<std::string, std::string>> facts;
};

struct VerifyOptions {
  std::uint64_t seed = 20130531;
  /// Only checks whose name contains this substring; empty runs everything.
  std::string filter;
};

/// Names of all checks, in run order.
std::vector<std::string> verification_names();

/**
 * Runs the worked examples and property suites. Each randomized check draws
 * from its own generator seeded from options.seed and the check's position,
 * so filtering does not change any individual outcome.
 */
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace efpoly
