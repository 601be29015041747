#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anomaly/report.hpp"

namespace anomaly {

// Run configuration for one scenario (or "all").  Tolerance scales every
// floating pinned tolerance by (tolerance / 1e-6); exact checks keep
// tolerance 0 regardless.  Reports are bit-identical for identical
// (scenario, seed, quad_order, gauge_p) across runs and worker counts.
struct ScenarioConfig {
  std::string scenario;
  int quad_order = 32;
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
  int gauge_p = 3;
  std::string output_path;

  // Throws std::invalid_argument on quad_order < 8 or tolerance <= 0.
  void validate() const;
};

// Canonical scenario order (excludes "all").
const std::vector<std::string>& scenario_names();
bool is_known_scenario(const std::string& name);

// Per-scenario deterministic stream: SplitMix64(seed ^ fnv1a64(name)).
SplitMix64 scenario_rng(std::uint64_t seed, const std::string& name);

// Runs one scenario (or "all", which concatenates every scenario's checks as
// "<scenario>/<check>" in canonical order; parallel_enabled() lets the
// sub-scenarios run concurrently without changing the assembled report).
// Throws std::invalid_argument for unknown scenario names or bad config
// (usage errors); computation failures are captured as status "error".
VerificationReport run_scenario(const ScenarioConfig& cfg);

}  // namespace anomaly
