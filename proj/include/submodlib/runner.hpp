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

//
// End-to-end runs behind the command-line tool: build a function from a
// RunConfig, maximize it, and report the result as JSON. Also the optimizer
// comparison and scaling benchmarks.

#ifndef SUBMODLIB_RUNNER_HPP_
#define SUBMODLIB_RUNNER_HPP_

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "submodlib/clustering.hpp"
#include "submodlib/datasets.hpp"
#include "submodlib/functions/clustered.hpp"
#include "submodlib/functions/disparity.hpp"
#include "submodlib/functions/facility_location.hpp"
#include "submodlib/functions/feature_based.hpp"
#include "submodlib/functions/graph_cut.hpp"
#include "submodlib/functions/log_determinant.hpp"
#include "submodlib/functions/set_cover.hpp"
#include "submodlib/information/concave_over_modular.hpp"
#include "submodlib/information/facility_location_info.hpp"
#include "submodlib/information/graph_cut_info.hpp"
#include "submodlib/information/log_det_info.hpp"
#include "submodlib/information/set_cover_info.hpp"
#include "submodlib/io.hpp"
#include "submodlib/kernel.hpp"
#include "submodlib/optimizers.hpp"

namespace submodlib {

// Inconsistent or incomplete run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string function = "FacilityLocation";
  std::string mode = "dense";  // dense | sparse | clustered
  Metric metric = Metric::kEuclidean;
  std::optional<std::size_t> k_neighbors;
  std::optional<std::size_t> clusters;
  OptimizeSpec optimize;
  double lambda = 0.5;
  double eta = 1.0;
  double nu = 1.0;
  double reg = kDefaultLogDetRegularization;
  std::string concave = "sqrt";
  std::string data;
  std::string kernel;  // precomputed dense kernel (binary)
  std::string query_data;
  std::string private_data;
  std::string concepts;
  std::string output;
  bool omit_timing = false;
};

// Canonical function names and their short aliases.
inline std::string CanonicalFunctionName(const std::string& name) {
  static const std::map<std::string, std::string> kAliases = {
      {"FL", "FacilityLocation"},
      {"GC", "GraphCut"},
      {"LogDet", "LogDeterminant"},
      {"DMin", "DisparityMin"},
      {"DSum", "DisparitySum"},
      {"SC", "SetCover"},
      {"PSC", "ProbabilisticSetCover"},
      {"FB", "FeatureBased"},
      {"FLVMI", "FacilityLocationMutualInformation"},
      {"FLQMI", "FacilityLocationVariantMutualInformation"},
      {"GCMI", "GraphCutMutualInformation"},
      {"LogDetMI", "LogDeterminantMutualInformation"},
      {"COM", "ConcaveOverModular"},
      {"SCMI", "SetCoverMutualInformation"},
      {"PSCMI", "ProbabilisticSetCoverMutualInformation"},
      {"FLCG", "FacilityLocationConditionalGain"},
      {"GCCG", "GraphCutConditionalGain"},
      {"LogDetCG", "LogDeterminantConditionalGain"},
      {"SCCG", "SetCoverConditionalGain"},
      {"PSCCG", "ProbabilisticSetCoverConditionalGain"},
      {"FLCMI", "FacilityLocationConditionalMutualInformation"},
      {"LogDetCMI", "LogDeterminantConditionalMutualInformation"},
      {"SCCMI", "SetCoverConditionalMutualInformation"},
      {"PSCCMI", "ProbabilisticSetCoverConditionalMutualInformation"},
  };
  if (auto it = kAliases.find(name); it != kAliases.end()) return it->second;
  for (const auto& [alias, full] : kAliases)
    if (full == name) return full;
  throw ConfigError("unknown function '" + name + "'");
}

namespace detail {

inline bool StartsWith(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}
inline bool EndsWith(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

inline bool UsesConcepts(const std::string& f) {
  return StartsWith(f, "SetCover") || StartsWith(f, "ProbabilisticSetCover");
}
inline bool NeedsQuery(const std::string& f) {
  return EndsWith(f, "MutualInformation") || f == "ConcaveOverModular";
}
inline bool NeedsPrivate(const std::string& f) {
  return EndsWith(f, "ConditionalGain") ||
         EndsWith(f, "ConditionalMutualInformation");
}

struct Inputs {
  std::optional<FeatureMatrix> data;
  std::optional<SimilarityKernel> kernel;
  std::optional<QueryContext> query;
  std::optional<PrivateContext> privates;
  std::optional<CrossKernel> query_private;
  std::optional<io::Concepts> concepts;
};

inline Inputs LoadInputs(const RunConfig& cfg, const std::string& fn) {
  Inputs in;
  if (UsesConcepts(fn)) {
    if (cfg.concepts.empty())
      throw ConfigError(fn + " requires --concepts");
    in.concepts = io::ReadConcepts(cfg.concepts);
    return in;
  }
  if (!cfg.data.empty()) in.data = io::ReadFeatures(cfg.data);
  if (fn == "FeatureBased") {
    if (!in.data) throw ConfigError("FeatureBased requires --data");
    return in;
  }
  if (!cfg.kernel.empty()) {
    if (cfg.mode == "sparse")
      throw ConfigError("a precomputed kernel cannot be used in sparse mode");
    in.kernel = io::ReadKernelBinary(cfg.kernel);
  } else if (!in.data) {
    throw ConfigError(fn + " requires --data (or --kernel)");
  } else if (cfg.mode == "sparse") {
    if (!cfg.k_neighbors) throw ConfigError("sparse mode requires --k-neighbors");
    in.kernel = BuildSparseKernel(*in.data, cfg.metric, *cfg.k_neighbors);
  } else {
    in.kernel = BuildDenseKernel(*in.data, cfg.metric);
  }
  std::optional<FeatureMatrix> queries, privates;
  if (NeedsQuery(fn)) {
    if (cfg.query_data.empty()) throw ConfigError(fn + " requires --query-data");
    if (!in.data) throw ConfigError(fn + " requires --data for cross kernels");
    queries = io::ReadFeatures(cfg.query_data);
    in.query = QueryContext::FromFeatures(*in.data, *queries, cfg.metric, cfg.eta);
  }
  if (NeedsPrivate(fn)) {
    if (cfg.private_data.empty())
      throw ConfigError(fn + " requires --private-data");
    if (!in.data) throw ConfigError(fn + " requires --data for cross kernels");
    privates = io::ReadFeatures(cfg.private_data);
    in.privates =
        PrivateContext::FromFeatures(*in.data, *privates, cfg.metric, cfg.nu);
  }
  if (queries && privates)
    in.query_private = BuildCrossKernel(*queries, *privates, cfg.metric);
  return in;
}

inline std::unique_ptr<SetFunction> BuildConceptFunction(
    const std::string& fn, const io::Concepts& c) {
  if (StartsWith(fn, "ProbabilisticSetCover")) {
    if (!c.prob_cover)
      throw ConfigError(fn + " requires \"probs\" in --concepts");
    const ProbCover& pc = *c.prob_cover;
    auto q = [&] { return CoveredIndicator(pc.num_concepts, c.query_concepts); };
    auto p = [&] { return MissedIndicator(pc.num_concepts, c.private_concepts); };
    if (fn == "ProbabilisticSetCover")
      return std::make_unique<ProbabilisticSetCover>(pc);
    if (fn == "ProbabilisticSetCoverMutualInformation")
      return MakeProbSetCoverMutualInformation(pc, q());
    if (fn == "ProbabilisticSetCoverConditionalGain")
      return MakeProbSetCoverConditionalGain(pc, p());
    return MakeProbSetCoverConditionalMutualInformation(pc, q(), p());
  }
  if (!c.cover) throw ConfigError(fn + " requires \"covers\" in --concepts");
  if (fn == "SetCover") return std::make_unique<SetCover>(*c.cover);
  if (fn == "SetCoverMutualInformation")
    return MakeSetCoverMutualInformation(*c.cover, c.query_concepts);
  if (fn == "SetCoverConditionalGain")
    return MakeSetCoverConditionalGain(*c.cover, c.private_concepts);
  return MakeSetCoverConditionalMutualInformation(*c.cover, c.query_concepts,
                                                  c.private_concepts);
}

}  // namespace detail

// Builds the configured function. Throws ConfigError on inconsistent
// settings and io::InputError on unreadable input.
inline std::unique_ptr<SetFunction> BuildFunction(const RunConfig& cfg) {
  const std::string fn = CanonicalFunctionName(cfg.function);
  if (cfg.mode != "dense" && cfg.mode != "sparse" && cfg.mode != "clustered")
    throw ConfigError("unknown mode '" + cfg.mode + "'");
  const bool classic_kernel = fn == "FacilityLocation" || fn == "GraphCut" ||
                              fn == "LogDeterminant" || fn == "DisparityMin" ||
                              fn == "DisparitySum";
  if (cfg.mode == "sparse" && fn != "FacilityLocation")
    throw ConfigError("sparse mode is supported for FacilityLocation only");
  if (cfg.mode == "clustered" && !classic_kernel)
    throw ConfigError("clustered mode is not supported for " + fn);

  detail::Inputs in = detail::LoadInputs(cfg, fn);
  if (in.concepts) return detail::BuildConceptFunction(fn, *in.concepts);
  if (fn == "FeatureBased") {
    const FeatureMatrix& d = *in.data;
    return std::make_unique<FeatureBased>(FeatureTable::FromDense(
        d.rows(), d.dims(), d.values(), ParseConcave(cfg.concave)));
  }
  const SimilarityKernel& k = *in.kernel;

  auto make_classic = [&](const SimilarityKernel& kk) -> std::unique_ptr<SetFunction> {
    if (fn == "FacilityLocation") return std::make_unique<FacilityLocation>(kk);
    if (fn == "GraphCut") return std::make_unique<GraphCut>(kk, cfg.lambda);
    if (fn == "LogDeterminant")
      return std::make_unique<LogDeterminant>(kk, cfg.reg);
    if (fn == "DisparityMin") return std::make_unique<DisparityMin>(kk);
    return std::make_unique<DisparitySum>(kk);
  };
  if (classic_kernel) {
    if (cfg.mode != "clustered") return make_classic(k);
    if (!cfg.clusters) throw ConfigError("clustered mode requires --clusters");
    if (!in.data) throw ConfigError("clustered mode requires --data");
    ClusterMap map = ClusterGroundSet(*in.data, *cfg.clusters, cfg.optimize.seed);
    if (fn == "FacilityLocation") return FacilityLocation::Clustered(map, k);
    return MakeClusteredFunction(map, k, make_classic);
  }

  if (fn == "FacilityLocationMutualInformation")
    return FacilityLocationInformation::MutualInformation(k, *in.query);
  if (fn == "FacilityLocationVariantMutualInformation")
    return std::make_unique<FacilityLocationVariantMutualInformation>(*in.query);
  if (fn == "GraphCutMutualInformation")
    return std::make_unique<GraphCutMutualInformation>(cfg.lambda, *in.query);
  if (fn == "LogDeterminantMutualInformation")
    return MakeLogDetMutualInformation(k, *in.query, cfg.reg);
  if (fn == "ConcaveOverModular")
    return std::make_unique<ConcaveOverModular>(*in.query,
                                                ParseConcave(cfg.concave));
  if (fn == "FacilityLocationConditionalGain")
    return FacilityLocationInformation::ConditionalGain(k, *in.privates);
  if (fn == "GraphCutConditionalGain")
    return std::make_unique<GraphCutConditionalGain>(k, cfg.lambda, *in.privates);
  if (fn == "LogDeterminantConditionalGain")
    return MakeLogDetConditionalGain(k, *in.privates, cfg.reg);
  if (fn == "FacilityLocationConditionalMutualInformation")
    return FacilityLocationInformation::ConditionalMutualInformation(
        k, *in.query, *in.privates);
  if (fn == "LogDeterminantConditionalMutualInformation")
    return MakeLogDetConditionalMutualInformation(k, *in.query, *in.privates,
                                                  in.query_private, cfg.reg);
  throw ConfigError("function " + fn + " cannot be built from this input");
}

inline nlohmann::ordered_json ResultJson(const SetFunction& f,
                                         const OptimizeSpec& spec,
                                         const GreedyResult& r,
                                         std::optional<double> wall_ms) {
  nlohmann::ordered_json j;
  j["function"] = f.Name();
  j["optimizer"] = OptimizerName(spec.optimizer);
  j["n"] = f.size();
  j["budget"] = spec.budget;
  j["selection"] = nlohmann::ordered_json::array();
  for (const Pick& p : r.picks)
    j["selection"].push_back({{"index", p.index}, {"gain", p.gain}});
  j["value"] = r.TotalGain();
  j["evaluations"] = r.evaluations;
  if (wall_ms) j["wall_ms"] = *wall_ms;
  return j;
}

struct RunOutput {
  GreedyResult result;
  nlohmann::ordered_json report;
};

// Builds, maximizes and writes the JSON report to cfg.output (if set).
inline RunOutput RunSelection(const RunConfig& cfg) {
  auto f = BuildFunction(cfg);
  try {
    cfg.optimize.Validate(f->size());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  GreedyResult r = Maximize(*f, cfg.optimize);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  RunOutput out{std::move(r), {}};
  out.report = ResultJson(*f, cfg.optimize, out.result,
                          cfg.omit_timing ? std::nullopt : std::optional(ms));
  if (!cfg.output.empty()) {
    std::ofstream o(cfg.output);
    if (!o) throw io::InputError(cfg.output, 0, "cannot open for writing");
    o << out.report.dump(2) << '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Benchmarks.

struct TimedRun {
  GreedyResult result;
  double best_ms = 0.0;
};

// Best wall time of `repeats` maximize calls.
inline TimedRun TimeMaximize(const SetFunction& f, const OptimizeSpec& spec,
                             int repeats) {
  TimedRun t;
  t.best_ms = std::numeric_limits<double>::infinity();
  for (int k = 0; k < repeats; ++k) {
    const auto start = std::chrono::steady_clock::now();
    GreedyResult r = Maximize(f, spec);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    t.best_ms = std::min(t.best_ms, ms);
    t.result = std::move(r);
  }
  return t;
}

struct BenchmarkOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 250;
  double epsilon = 1e-6;
  int repeats = 5;
  Optimizer scaling_optimizer = Optimizer::kLazy;
  std::size_t scaling_budget = 100;
  std::size_t scaling_dims = 1024;
  std::vector<std::size_t> scaling_sizes = {50, 100, 200, 500, 1000, 2000};
};

struct OptimizerRow {
  Optimizer optimizer;
  double wall_ms;
  std::size_t evaluations;
  double value;
};

// FL dense (euclidean) on the 500-point / 10-cluster dataset, all four
// optimizers at the same budget.
inline std::vector<OptimizerRow> BenchmarkOptimizers(
    const BenchmarkOptions& opt) {
  const auto set = datasets::OptimizerBenchmarkData(opt.seed);
  FacilityLocation f(BuildDenseKernel(set.data, Metric::kEuclidean));
  std::vector<OptimizerRow> rows;
  for (Optimizer o : {Optimizer::kNaive, Optimizer::kStochastic,
                      Optimizer::kLazy, Optimizer::kLazier}) {
    OptimizeSpec spec;
    spec.budget = opt.budget;
    spec.optimizer = o;
    spec.seed = opt.seed;
    if (IsSampling(o)) spec.epsilon = opt.epsilon;
    TimedRun t = TimeMaximize(f, spec, opt.repeats);
    rows.push_back({o, t.best_ms, t.result.evaluations, t.result.TotalGain()});
  }
  return rows;
}

struct ScalingRow {
  std::size_t n;
  std::size_t budget;
  double kernel_ms;
  double maximize_ms;
  std::size_t evaluations;
};

// FL dense (euclidean) on uniform random points of growing size.
inline std::vector<ScalingRow> BenchmarkScaling(const BenchmarkOptions& opt) {
  std::vector<ScalingRow> rows;
  for (std::size_t n : opt.scaling_sizes) {
    const FeatureMatrix data =
        datasets::UniformPoints(n, opt.scaling_dims, opt.seed + n);
    const auto start = std::chrono::steady_clock::now();
    FacilityLocation f(BuildDenseKernel(data, Metric::kEuclidean));
    const double kernel_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    OptimizeSpec spec;
    spec.budget = std::min(opt.scaling_budget, n);
    spec.optimizer = opt.scaling_optimizer;
    spec.seed = opt.seed;
    if (IsSampling(spec.optimizer)) spec.epsilon = opt.epsilon;
    TimedRun t = TimeMaximize(f, spec, opt.repeats);
    rows.push_back({n, spec.budget, kernel_ms, t.best_ms, t.result.evaluations});
  }
  return rows;
}

inline nlohmann::ordered_json OptimizerReport(
    const std::vector<OptimizerRow>& rows, const BenchmarkOptions& opt) {
  nlohmann::ordered_json j;
  j["benchmark"] = "optimizers";
  j["dataset"] = {{"points", 500}, {"clusters", 10}, {"stddev", 4.0},
                  {"seed", opt.seed}};
  j["function"] = "FacilityLocation";
  j["budget"] = opt.budget;
  j["epsilon"] = opt.epsilon;
  j["repeats"] = opt.repeats;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["results"].push_back({{"optimizer", OptimizerName(r.optimizer)},
                            {"wall_ms", r.wall_ms},
                            {"evaluations", r.evaluations},
                            {"value", r.value}});
  }
  return j;
}

inline nlohmann::ordered_json ScalingReport(const std::vector<ScalingRow>& rows,
                                            const BenchmarkOptions& opt) {
  nlohmann::ordered_json j;
  j["benchmark"] = "scaling";
  j["function"] = "FacilityLocation";
  j["optimizer"] = OptimizerName(opt.scaling_optimizer);
  j["dims"] = opt.scaling_dims;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["results"].push_back({{"n", r.n},
                            {"budget", r.budget},
                            {"kernel_ms", r.kernel_ms},
                            {"maximize_ms", r.maximize_ms},
                            {"evaluations", r.evaluations}});
  }
  return j;
}

inline void WriteOptimizerCsv(const std::string& path,
                              const std::vector<OptimizerRow>& rows) {
  std::ofstream o(path);
  if (!o) throw io::InputError(path, 0, "cannot open for writing");
  o << "optimizer,wall_ms,evaluations,value\n";
  for (const auto& r : rows)
    o << OptimizerName(r.optimizer) << ',' << r.wall_ms << ',' << r.evaluations
      << ',' << r.value << '\n';
}

inline void WriteScalingCsv(const std::string& path,
                            const std::vector<ScalingRow>& rows) {
  std::ofstream o(path);
  if (!o) throw io::InputError(path, 0, "cannot open for writing");
  o << "n,budget,kernel_ms,maximize_ms,evaluations\n";
  for (const auto& r : rows)
    o << r.n << ',' << r.budget << ',' << r.kernel_ms << ',' << r.maximize_ms
      << ',' << r.evaluations << '\n';
}

}  // namespace submodlib

#endif  // SUBMODLIB_RUNNER_HPP_
