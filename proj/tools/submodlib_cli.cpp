// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 configuration error,
// 3 input error, 1 anything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "submodlib/runner.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kInputExit = 3;

// Accepts "dense", "sparse", "clustered", or "sparse:K" / "clustered:K".
void ApplyMode(const std::string& mode, submodlib::RunConfig& cfg) {
  const auto colon = mode.find(':');
  cfg.mode = mode.substr(0, colon);
  if (colon == std::string::npos) return;
  std::size_t k = 0;
  try {
    k = std::stoul(mode.substr(colon + 1));
  } catch (const std::exception&) {
    throw submodlib::ConfigError("cannot parse count in mode '" + mode + "'");
  }
  if (cfg.mode == "sparse") {
    cfg.k_neighbors = k;
  } else if (cfg.mode == "clustered") {
    cfg.clusters = k;
  } else {
    throw submodlib::ConfigError("mode '" + cfg.mode + "' takes no count");
  }
}

void Emit(const nlohmann::ordered_json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream o(output);
  if (!o) throw submodlib::io::InputError(output, 0, "cannot open for writing");
  o << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular subset selection"};
  submodlib::RunConfig cfg;
  std::string mode = "dense", metric = "euclidean", optimizer = "naive";
  std::string benchmark, csv;
  std::size_t budget = 0;
  std::optional<std::size_t> k_neighbors, clusters;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  int repeats = 5;

  app.add_option("--function", cfg.function, "Function name or alias (FL, GC, LogDetMI, ...)");
  app.add_option("--mode", mode, "dense | sparse[:k] | clustered[:k]");
  app.add_option("--metric", metric, "euclidean | cosine");
  app.add_option("--k-neighbors", k_neighbors, "Neighbors per row in sparse mode");
  app.add_option("--clusters", clusters, "Cluster count in clustered mode");
  app.add_option("--budget", budget, "Cardinality budget (>= 1)");
  app.add_option("--optimizer", optimizer, "naive | lazy | stochastic | lazier");
  app.add_option("--epsilon", epsilon, "Sampling epsilon in (0, 1)");
  app.add_option("--seed", seed, "Seed for all randomness");
  app.add_option("--lambda", cfg.lambda, "Graph cut trade-off");
  app.add_option("--eta", cfg.eta, "Query relevance trade-off");
  app.add_option("--nu", cfg.nu, "Privacy strictness");
  app.add_option("--reg", cfg.reg, "Log-det diagonal regularization");
  app.add_option("--concave", cfg.concave, "sqrt | log | inverse");
  app.add_option("--data", cfg.data, "Ground-set features (.csv or .bin)");
  app.add_option("--kernel", cfg.kernel, "Precomputed dense kernel (.bin)");
  app.add_option("--query-data", cfg.query_data, "Query features");
  app.add_option("--private-data", cfg.private_data, "Private features");
  app.add_option("--concepts", cfg.concepts, "Concept cover JSON");
  app.add_option("--output", cfg.output, "Output JSON path (default stdout)");
  app.add_flag("--stop-if-zero-gain", cfg.optimize.stop_if_zero_gain);
  app.add_flag("--stop-if-negative-gain", cfg.optimize.stop_if_negative_gain);
  app.add_flag("--omit-timing", cfg.omit_timing, "Leave wall_ms out of the report");
  app.add_option("--benchmark", benchmark, "optimizers | scaling")
      ->check(CLI::IsMember({"optimizers", "scaling"}));
  app.add_option("--csv", csv, "Benchmark CSV output path");
  app.add_option("--repeats", repeats, "Benchmark repetitions (best time kept)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kConfigExit;
  }

  try {
    cfg.metric = submodlib::ParseMetric(metric);
    cfg.optimize.optimizer = submodlib::ParseOptimizer(optimizer);
    cfg.optimize.seed = seed;

    if (!benchmark.empty()) {
      submodlib::BenchmarkOptions opt;
      opt.seed = seed;
      opt.repeats = repeats;
      if (epsilon) opt.epsilon = *epsilon;
      if (budget) {
        opt.budget = budget;
        opt.scaling_budget = budget;
      }
      if (app.count("--optimizer")) opt.scaling_optimizer = cfg.optimize.optimizer;
      if (benchmark == "optimizers") {
        auto rows = submodlib::BenchmarkOptimizers(opt);
        if (!csv.empty()) submodlib::WriteOptimizerCsv(csv, rows);
        Emit(submodlib::OptimizerReport(rows, opt), cfg.output);
      } else {
        auto rows = submodlib::BenchmarkScaling(opt);
        if (!csv.empty()) submodlib::WriteScalingCsv(csv, rows);
        Emit(submodlib::ScalingReport(rows, opt), cfg.output);
      }
      return 0;
    }

    if (budget < 1) throw submodlib::ConfigError("budget must be >= 1");
    cfg.optimize.budget = budget;
    cfg.optimize.epsilon = epsilon;
    cfg.k_neighbors = k_neighbors;
    cfg.clusters = clusters;
    ApplyMode(mode, cfg);
    auto out = submodlib::RunSelection(cfg);
    if (cfg.output.empty()) std::cout << out.report.dump(2) << '\n';
    return 0;
  } catch (const submodlib::io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
