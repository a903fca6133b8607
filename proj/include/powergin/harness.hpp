// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace powergin::harness {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One runnable experiment: a catalog id plus numeric parameter overrides.
/// Unknown parameters are rejected.
struct ExperimentSpec {
  std::string id;
  std::map<std::string, double> params;
  std::uint64_t seed = 12345;
  std::string outdir;  // empty: no files written
};

struct TestReport {
  std::string id;
  bool pass = false;
  double observed = 0.0;   // the headline statistic
  double reference = 0.0;  // its reference value
  std::string provenance;  // "exact" | "closed-form" | "oracle-sampler"
  double tolerance = 0.0;  // tolerance or standard-error band
  double margin = 0.0;     // how far past the tolerance a failure landed
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  nlohmann::ordered_json details;

  /// {"result": {...deterministic...}, "runtime_ms": ...}; everything
  /// under "result" is byte-stable for a fixed spec and seed.
  nlohmann::ordered_json to_json() const;
  static TestReport from_json(const nlohmann::json& j);
};

/// Catalog ids in execution order.
std::vector<std::string> experiment_ids();

/// Default seed: POWERGIN_SEED from the environment when set, else 12345.
std::uint64_t default_seed();

/// Runs one experiment. Module-level errors are captured into a failed
/// report rather than propagated. Writes report.json / data.csv / *.svg
/// under spec.outdir when it is nonempty.
TestReport run_experiment(const ExperimentSpec& spec);

struct RunAllConfig {
  std::uint64_t seed = 12345;
  std::string outdir;
  std::vector<std::string> only;  // empty: full catalog
  std::map<std::string, std::map<std::string, double>> params;
  int workers = 2;
};

/// Flat key=value lines or a JSON object; see README for the schema.
RunAllConfig config_from_file(const std::string& path);

struct RunAllSummary {
  std::vector<TestReport> reports;
  bool all_pass = false;
};

RunAllSummary run_all(const RunAllConfig& config);

}  // namespace powergin::harness
