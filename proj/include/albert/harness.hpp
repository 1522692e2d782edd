#pragma once

#include "albert/config.hpp"
#include "albert/operators.hpp"

namespace albert {

struct SuiteOutcome {
  std::string name;
  size_t samples = 0;
  jsonu::Json failures = jsonu::Json::array();
  jsonu::Json extra = jsonu::Json::object();  // suite-specific payload
  double wall_ms = 0.0;
};

struct RunResult {
  std::vector<SuiteOutcome> outcomes;  // declared order
  bool any_failure = false;
};

// FNV-1a over the canonical config text, hex encoded.
std::string config_fingerprint(const jsonu::Json& canonical);

// Report line; everything except wall_ms is deterministic for a fixed
// (config, seed).
jsonu::Json outcome_json(const SuiteOutcome& o, const std::string& fingerprint);

// Runs the configured suites. Each suite draws from a seed derived from
// (master seed, suite name, position), so ALBERTCTL_THREADS never changes
// results, only wall time. Throws on construction/config errors; suite
// failures are data, not exceptions.
RunResult run_suites(const RunConfig& cfg, const BuiltAlgebra& alg);

// Full division probe for the probe-division verb.
jsonu::Json probe_report(const BuiltAlgebra& alg, size_t trials,
                         size_t subalgebra_samples, uint64_t seed);

}  // namespace albert
