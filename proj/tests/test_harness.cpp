// Copyright (c) 2026 The powergin authors
//
// Licensed under the Apache License, Version 2.0. You may obtain a copy
// of this license at http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "powergin/harness.hpp"

using namespace powergin::harness;

namespace {

std::string temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("powergin-test-" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("catalog lists every experiment exactly once") {
  const auto ids = experiment_ids();
  CHECK(ids.size() == 16);
  for (const auto& want :
       {"kostlan-ks", "highpower-indep", "pg-decomposition-exact", "pg-decomposition-mc",
        "pg-kostlan", "twisted-law", "gff-variance", "cue-rains", "cue-charpoly",
        "gue-decomposition", "gue-det", "mroot-asymptotics", "microscopic-kernel",
        "beta-latent-n2", "beta-latent-mcmc", "identity-library"}) {
    CHECK(std::count(ids.begin(), ids.end(), want) == 1);
  }
}

TEST_CASE("run a fast deterministic experiment and round-trip its report") {
  ExperimentSpec spec;
  spec.id = "pg-decomposition-exact";
  spec.params["N_max"] = 5;
  spec.params["polys"] = 5;
  spec.seed = 2024;
  spec.outdir = temp_dir("report");
  const TestReport rep = run_experiment(spec);
  CHECK(rep.pass);
  CHECK(rep.observed <= 1e-9);
  CHECK(rep.provenance == "exact");
  CHECK(rep.margin == 0.0);
  CHECK(rep.seed == 2024);

  // the written report reloads to the same verdict
  std::ifstream in(spec.outdir + "/report.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  const TestReport back = TestReport::from_json(j);
  CHECK(back.pass == rep.pass);
  CHECK(back.observed == rep.observed);
  CHECK(back.id == rep.id);

  // identical spec and seed: byte-identical result object
  const TestReport rep2 = run_experiment(spec);
  CHECK(rep.to_json()["result"].dump() == rep2.to_json()["result"].dump());
}

TEST_CASE("unknown ids and parameters are rejected") {
  ExperimentSpec bad;
  bad.id = "not-an-experiment";
  CHECK_THROWS_AS(run_experiment(bad), ConfigError);

  ExperimentSpec spec;
  spec.id = "pg-decomposition-exact";
  spec.params["definitely_not_a_param"] = 1.0;
  CHECK_THROWS_AS(run_experiment(spec), ConfigError);
}

TEST_CASE("module errors become failed reports, not crashes") {
  ExperimentSpec spec;
  spec.id = "beta-latent-n2";
  spec.params["p_max"] = 40;  // over the expansion guard
  const TestReport rep = run_experiment(spec);
  CHECK(!rep.pass);
  CHECK(rep.provenance == "error");
  CHECK(rep.details.contains("error"));
}

TEST_CASE("config files: flat and JSON forms") {
  const std::string dir = temp_dir("config");
  {
    std::ofstream out(dir + "/flat.cfg");
    out << "# comment\n";
    out << "seed=99\n";
    out << "only=identity-library,beta-latent-n2\n";
    out << "beta-latent-n2.p_max=3\n";
  }
  const RunAllConfig flat = config_from_file(dir + "/flat.cfg");
  CHECK(flat.seed == 99);
  CHECK(flat.only == std::vector<std::string>{"identity-library", "beta-latent-n2"});
  CHECK(flat.params.at("beta-latent-n2").at("p_max") == 3.0);

  {
    std::ofstream out(dir + "/conf.json");
    out << R"({"seed": 7, "only": ["beta-latent-n2"], "params": {"beta-latent-n2": {"p_max": 2}}})";
  }
  const RunAllConfig js = config_from_file(dir + "/conf.json");
  CHECK(js.seed == 7);
  CHECK(js.only == std::vector<std::string>{"beta-latent-n2"});

  {
    std::ofstream out(dir + "/broken.json");
    out << "{\"seed\": ";
  }
  CHECK_THROWS_AS(config_from_file(dir + "/broken.json"), ConfigError);
  {
    std::ofstream out(dir + "/bad.cfg");
    out << "no equals sign here\n";
  }
  CHECK_THROWS_AS(config_from_file(dir + "/bad.cfg"), ConfigError);
  CHECK_THROWS_AS(config_from_file(dir + "/missing.cfg"), ConfigError);
}

TEST_CASE("run_all with a filter honors the catalog and writes a summary") {
  RunAllConfig config;
  config.seed = 5;
  config.only = {"beta-latent-n2", "mroot-asymptotics"};
  config.outdir = temp_dir("runall");
  config.workers = 2;
  const RunAllSummary summary = run_all(config);
  CHECK(summary.reports.size() == 2);
  CHECK(summary.reports[0].id == "beta-latent-n2");
  CHECK(summary.all_pass);
  CHECK(std::filesystem::exists(config.outdir + "/summary.json"));
  CHECK(std::filesystem::exists(config.outdir + "/beta-latent-n2/report.json"));

  RunAllConfig bad;
  bad.only = {"nope"};
  CHECK_THROWS_AS(run_all(bad), ConfigError);
}

TEST_CASE("environment seed override") {
  setenv("POWERGIN_SEED", "31337", 1);
  CHECK(default_seed() == 31337);
  unsetenv("POWERGIN_SEED");
  CHECK(default_seed() == 12345);
}
