#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fht/weight_param.hpp"

namespace fht::cli {

enum class Relation { AtMost, AtLeast };

struct PropertyResult {
  std::string name;
  std::size_t n = 0;
  double value = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::AtMost;
  bool pass = false;
};

struct VerifyOptions {
  std::vector<std::size_t> sizes{64, 256};
  /// Adds a condition check (and, for eta, a contraction check) for this
  /// parameter.
  std::optional<WeightParam> extra;
};

struct VerifySummary {
  std::vector<PropertyResult> results;
  double wall_time_ms = 0.0;

  bool all_passed() const;
};

/// Runs the module property suites at every size in opts.sizes; properties
/// tied to one fixed size run once. Prints one line per property to `log`
/// when given.
VerifySummary run_verify(const VerifyOptions& opts, std::ostream* log);

std::string summary_json(const VerifySummary& summary);

}  // namespace fht::cli
