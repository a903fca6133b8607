// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "powergin/harness.hpp"
#include "powergin/vandermonde_power.hpp"

namespace {

void print_report(const powergin::harness::TestReport& r) {
  std::printf("[%s] %-24s observed=%.6g reference=%.6g tol=%.3g (%s, %.0f ms)\n",
              r.pass ? "PASS" : "FAIL", r.id.c_str(), r.observed, r.reference,
              r.tolerance, r.provenance.c_str(), r.runtime_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for power maps of radially symmetric "
               "determinantal ensembles"};
  app.require_subcommand(1);

  // run <experiment-id> [--param key=value]... [--seed S] [--out DIR]
  auto* run = app.add_subcommand("run", "run one experiment from the catalog");
  std::string run_id, run_out;
  std::vector<std::string> run_params;
  std::uint64_t run_seed = powergin::harness::default_seed();
  run->add_option("experiment", run_id, "experiment id (see `list`)")->required();
  run->add_option("--param", run_params, "parameter override, key=value");
  run->add_option("--seed", run_seed, "RNG seed (default: POWERGIN_SEED or 12345)");
  run->add_option("--out", run_out, "output directory for report.json/data.csv/plots");

  // run-all [--config FILE]
  auto* run_all_cmd = app.add_subcommand("run-all", "run the whole catalog");
  std::string config_path, all_out;
  std::uint64_t all_seed = powergin::harness::default_seed();
  bool all_seed_set = false;
  run_all_cmd->add_option("--config", config_path, "config file (JSON or key=value)");
  run_all_cmd->add_option("--out", all_out, "output directory");
  run_all_cmd->add_option("--seed", all_seed, "RNG seed")->each([&](const std::string&) {
    all_seed_set = true;
  });

  auto* list = app.add_subcommand("list", "list the experiment catalog");

  // table <N> <p> [--out FILE]
  auto* table = app.add_subcommand("table", "emit the Vandermonde-power table as JSON");
  int table_n = 2, table_p = 1;
  std::string table_out;
  table->add_option("N", table_n, "number of variables")->required();
  table->add_option("p", table_p, "power of the Vandermonde determinant")->required();
  table->add_option("--out", table_out, "write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& id : powergin::harness::experiment_ids())
        std::cout << id << "\n";
      return 0;
    }
    if (*run) {
      powergin::harness::ExperimentSpec spec;
      spec.id = run_id;
      spec.seed = run_seed;
      spec.outdir = run_out;
      for (const auto& kv : run_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw powergin::harness::ConfigError("--param expects key=value, got: " + kv);
        spec.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      }
      const auto report = powergin::harness::run_experiment(spec);
      print_report(report);
      return report.pass ? 0 : 1;
    }
    if (*run_all_cmd) {
      powergin::harness::RunAllConfig config;
      config.seed = powergin::harness::default_seed();
      if (!config_path.empty())
        config = powergin::harness::config_from_file(config_path);
      if (all_seed_set) config.seed = all_seed;
      if (!all_out.empty()) config.outdir = all_out;
      const auto summary = powergin::harness::run_all(config);
      for (const auto& r : summary.reports) print_report(r);
      std::printf("%s (%zu experiments)\n",
                  summary.all_pass ? "ALL PASS" : "FAILURES PRESENT",
                  summary.reports.size());
      return summary.all_pass ? 0 : 1;
    }
    if (*table) {
      const auto t = powergin::expand_vandermonde_power(table_n, table_p, 8, 8);
      const std::string json = powergin::table_to_json(t);
      if (table_out.empty()) {
        std::cout << json << "\n";
      } else {
        std::ofstream out(table_out);
        out << json << "\n";
      }
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
