#pragma once

// Seeded property suites. Every sampled property draws from its own
// (seed, stream) pair so results do not depend on which suites run.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsob {

enum class Suite { all, entropy, logsobolev, pinsker, concavity, shearer };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Overrides every per-property sample count when > 0.
  int samples = 0;
};

using Witness = std::vector<std::pair<std::string, std::vector<double>>>;

struct PropertyResult {
  std::string name;
  std::string suite;
  bool passed = false;
  /// An expected failure passes when the search finds a counterexample.
  bool expected_failure = false;
  /// Smallest margin seen; pass means worst_slack >= threshold.
  double worst_slack = 0.0;
  double threshold = 0.0;
  int samples = 0;
  /// Data for the worst sample. Filled on failure and for expected failures.
  Witness witness;
};

std::vector<PropertyResult> run_suite(Suite suite, const VerifyOptions& options = {});

/// True iff every result passed.
bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace lsob
