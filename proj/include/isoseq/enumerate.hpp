#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoseq/config.hpp"

namespace isoseq {

/// Enumeration request. Hard budget guard: n <= 7 for up to 2 colors,
/// n <= 6 for 3 colors (enumeration beyond that is refused, never truncated).
struct EnumSpec {
  int n = 0;
  int max_colors = 2;
  std::optional<int> exact_colors;
};

/// Exactly one representative per orbit of edge colorings under vertex
/// permutations and color permutations; each representative is the
/// lexicographically least coloring in its orbit (colors normalized by first
/// occurrence). Orderly generation, vertex by vertex.
std::vector<DistanceConfiguration> enumerate_configs(const EnumSpec& spec);

struct CheckOutcome {
  long pass = 0;
  long fail = 0;
  long na = 0;
  bool operator==(const CheckOutcome&) const = default;
};

struct Counterexample {
  long config_index = 0;
  DistanceConfiguration config;
  std::string check;
  std::string details;
  bool operator==(const Counterexample&) const = default;
};

struct SweepReport {
  long total = 0;
  std::map<std::string, CheckOutcome> checks;
  std::vector<Counterexample> counterexamples;
  bool operator==(const SweepReport&) const = default;
};

/// Valid check identifiers for sweep().
const std::vector<std::string>& known_checks();

/// Runs each named check on every enumerated configuration. Deterministic:
/// the report is independent of the worker count.
SweepReport sweep(const EnumSpec& spec, const std::vector<std::string>& checks);
SweepReport sweep_serial(const EnumSpec& spec, const std::vector<std::string>& checks);

/// Single-configuration variant used by the CLI verify verb on file input.
SweepReport sweep_configs(const std::vector<DistanceConfiguration>& configs,
                          const std::vector<std::string>& checks,
                          bool parallel = true);

}  // namespace isoseq
