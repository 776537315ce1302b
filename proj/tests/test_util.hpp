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

// Random instances and property checks shared by the unit tests and the
// acceptance binary.

#ifndef SUBMODLIB_TESTS_TEST_UTIL_HPP_
#define SUBMODLIB_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "submodlib/oracle.hpp"
#include "submodlib/submodlib.hpp"

namespace submodlib::testing {

using Rng = std::mt19937_64;

inline FeatureMatrix RandomPoints(std::size_t n, std::size_t dims, Rng& rng,
                                  double scale = 3.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<double> v(n * dims);
  for (double& x : v) x = u(rng);
  return FeatureMatrix(n, dims, std::move(v));
}

inline SimilarityKernel RandomKernel(std::size_t n, Rng& rng,
                                     std::size_t dims = 3) {
  return BuildDenseKernel(RandomPoints(n, dims, rng), Metric::kEuclidean);
}

inline oracle::Dense ToDense(const SimilarityKernel& k) {
  oracle::Dense d(k.size(), std::vector<double>(k.size()));
  for (Index i = 0; i < k.size(); ++i)
    for (Index j = 0; j < k.size(); ++j) d[i][j] = k(i, j);
  return d;
}

inline oracle::Dense ToDense(const CrossKernel& k) {
  oracle::Dense d(k.rows(), std::vector<double>(k.cols()));
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) d[i][j] = k(i, j);
  return d;
}

// Each element is kept with probability p.
inline Subset RandomSubset(std::size_t n, Rng& rng, double p = 0.5) {
  std::bernoulli_distribution keep(p);
  std::vector<Index> m;
  for (Index i = 0; i < n; ++i)
    if (keep(rng)) m.push_back(i);
  return Subset(std::move(m));
}

inline std::vector<Index> RandomPermutation(std::size_t n, Rng& rng) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline ConceptCover RandomConceptCover(std::size_t n, std::size_t concepts,
                                       Rng& rng) {
  ConceptCover c;
  c.num_concepts = concepts;
  std::uniform_real_distribution<double> w(0.1, 2.0);
  std::bernoulli_distribution has(0.3);
  for (std::size_t u = 0; u < concepts; ++u) c.weights.push_back(w(rng));
  c.covers.resize(n);
  for (auto& cov : c.covers)
    for (std::size_t u = 0; u < concepts; ++u)
      if (has(rng)) cov.push_back(u);
  return c;
}

inline ProbCover RandomProbCover(std::size_t n, std::size_t concepts, Rng& rng) {
  ProbCover c;
  c.num_concepts = concepts;
  std::uniform_real_distribution<double> w(0.1, 2.0), p(0.0, 1.0);
  std::bernoulli_distribution has(0.5);
  for (std::size_t u = 0; u < concepts; ++u) c.weights.push_back(w(rng));
  c.probs.resize(n);
  for (auto& row : c.probs)
    for (std::size_t u = 0; u < concepts; ++u)
      if (has(rng)) row.emplace_back(u, p(rng));
  return c;
}

inline FeatureTable RandomFeatureTable(std::size_t n, std::size_t features,
                                       Concave g, Rng& rng) {
  std::uniform_real_distribution<double> s(0.0, 3.0);
  std::bernoulli_distribution has(0.6);
  std::vector<double> dense(n * features, 0.0);
  for (double& v : dense)
    if (has(rng)) v = s(rng);
  FeatureTable t = FeatureTable::FromDense(n, features, dense, g);
  std::uniform_real_distribution<double> w(0.2, 2.0);
  for (double& x : t.weights) x = w(rng);
  return t;
}

inline oracle::Dense ProbsDense(const ProbCover& c) {
  oracle::Dense d(c.probs.size(), std::vector<double>(c.num_concepts, 0.0));
  for (std::size_t x = 0; x < c.probs.size(); ++x)
    for (auto [u, p] : c.probs[x]) d[x][u] = p;
  return d;
}

inline oracle::Dense ScoresDense(const FeatureTable& t) {
  oracle::Dense d(t.scores.size(), std::vector<double>(t.num_features, 0.0));
  for (std::size_t x = 0; x < t.scores.size(); ++x)
    for (auto [f, m] : t.scores[x]) d[x][f] = m;
  return d;
}

// Kernel over V u Q u P (V first), sliced into the ground kernel and the
// query/private contexts.
struct JointInstance {
  std::size_t n = 0, nq = 0, np = 0;
  SimilarityKernel joint;
  SimilarityKernel ground;
  QueryContext query;
  PrivateContext privates;
  CrossKernel query_private;

  std::vector<Index> Q() const {
    std::vector<Index> q(nq);
    std::iota(q.begin(), q.end(), n);
    return q;
  }
  std::vector<Index> P() const {
    std::vector<Index> p(np);
    std::iota(p.begin(), p.end(), n + nq);
    return p;
  }
};

inline JointInstance MakeJoint(std::size_t n, std::size_t nq, std::size_t np,
                               Rng& rng, double eta = 1.0, double nu = 1.0) {
  JointInstance j;
  j.n = n;
  j.nq = nq;
  j.np = np;
  j.joint = RandomKernel(n + nq + np, rng);
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), 0);
  j.ground = j.joint.Submatrix(v);
  auto block = [&](const std::vector<Index>& rows,
                   const std::vector<Index>& cols) {
    std::vector<double> out;
    for (Index r : rows)
      for (Index c : cols) out.push_back(j.joint(r, c));
    return CrossKernel(rows.size(), cols.size(), std::move(out));
  };
  j.query.query_kernel = block(v, j.Q());
  if (nq) j.query.query_query_kernel = j.joint.Submatrix(j.Q());
  j.query.eta = eta;
  j.privates.private_kernel = block(v, j.P());
  if (np) j.privates.private_private_kernel = j.joint.Submatrix(j.P());
  j.privates.nu = nu;
  j.query_private = block(j.Q(), j.P());
  return j;
}

enum class Curvature { kSubmodular, kSupermodular, kNone };

struct Case {
  std::string name;
  std::shared_ptr<const SetFunction> f;
  Curvature curvature;
};

// One instance of every function family (and mode) on a ground set of n.
inline std::vector<Case> Catalog(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Case> out;
  auto add = [&](std::string name, std::shared_ptr<const SetFunction> f,
                 Curvature c = Curvature::kSubmodular) {
    out.push_back({std::move(name), std::move(f), c});
  };
  const FeatureMatrix pts = RandomPoints(n, 3, rng);
  const SimilarityKernel k = BuildDenseKernel(pts, Metric::kEuclidean);
  const FeatureMatrix unit = RandomPoints(n, 4, rng, 1.0);
  const SimilarityKernel kc = BuildDenseKernel(unit, Metric::kCosine);
  std::vector<std::size_t> assign(n);
  for (Index i = 0; i < n; ++i) assign[i] = i % 3;
  const ClusterMap clusters(assign);

  add("FL/dense", std::make_shared<FacilityLocation>(k));
  add("FL/cosine", std::make_shared<FacilityLocation>(kc));
  add("FL/sparse", std::make_shared<FacilityLocation>(
                       BuildSparseKernel(pts, Metric::kEuclidean, 3)));
  add("FL/separate", std::make_shared<FacilityLocation>(BuildCrossKernel(
                         RandomPoints(7, 3, rng), pts, Metric::kEuclidean)));
  add("FL/clustered", FacilityLocation::Clustered(clusters, k));
  add("GC/0.3", std::make_shared<GraphCut>(k, 0.3));
  add("GC/0.8", std::make_shared<GraphCut>(k, 0.8));
  add("GC/separate", std::make_shared<GraphCut>(
                         k,
                         BuildCrossKernel(RandomPoints(6, 3, rng), pts,
                                          Metric::kEuclidean),
                         0.4));
  add("LogDet", std::make_shared<LogDeterminant>(k));
  add("DMin", std::make_shared<DisparityMin>(k), Curvature::kNone);
  add("DSum", std::make_shared<DisparitySum>(k), Curvature::kSupermodular);
  add("SC", std::make_shared<SetCover>(RandomConceptCover(n, 8, rng)));
  add("PSC", std::make_shared<ProbabilisticSetCover>(RandomProbCover(n, 6, rng)));
  add("FB/sqrt", std::make_shared<FeatureBased>(
                     RandomFeatureTable(n, 5, Concave::kSqrt, rng)));
  add("FB/log", std::make_shared<FeatureBased>(
                    RandomFeatureTable(n, 5, Concave::kLog1p, rng)));
  add("FB/inverse", std::make_shared<FeatureBased>(
                        RandomFeatureTable(n, 5, Concave::kInverse, rng)));
  add("Clustered/GC", MakeClusteredFunction(
                          clusters, k, [](const SimilarityKernel& kk) {
                            return std::make_unique<GraphCut>(kk, 0.4);
                          }));
  add("Clustered/LogDet", MakeClusteredFunction(
                              clusters, k, [](const SimilarityKernel& kk) {
                                return std::make_unique<LogDeterminant>(kk);
                              }));

  const JointInstance j = MakeJoint(n, 3, 2, rng, 0.8, 0.7);
  add("FLVMI", FacilityLocationInformation::MutualInformation(j.ground, j.query));
  add("FLQMI", std::make_shared<FacilityLocationVariantMutualInformation>(j.query));
  add("GCMI", std::make_shared<GraphCutMutualInformation>(0.4, j.query));
  // The log-det MI/CMI differences carry no exact diminishing-returns
  // guarantee; see the dedicated information tests.
  add("LogDetMI", MakeLogDetMutualInformation(j.ground, j.query), Curvature::kNone);
  add("COM/sqrt", std::make_shared<ConcaveOverModular>(j.query, Concave::kSqrt));
  add("COM/log", std::make_shared<ConcaveOverModular>(j.query, Concave::kLog1p));
  add("FLCG", FacilityLocationInformation::ConditionalGain(j.ground, j.privates));
  add("GCCG", std::make_shared<GraphCutConditionalGain>(j.ground, 0.4, j.privates));
  add("LogDetCG", MakeLogDetConditionalGain(j.ground, j.privates));
  add("FLCMI", FacilityLocationInformation::ConditionalMutualInformation(
                   j.ground, j.query, j.privates));
  add("LogDetCMI",
      MakeLogDetConditionalMutualInformation(j.ground, j.query, j.privates,
                                             j.query_private),
      Curvature::kNone);

  const ConceptCover cover = RandomConceptCover(n, 8, rng);
  add("SCMI", MakeSetCoverMutualInformation(cover, {0, 2, 3, 5}));
  add("SCCG", MakeSetCoverConditionalGain(cover, {1, 2}));
  add("SCCMI", MakeSetCoverConditionalMutualInformation(cover, {0, 2, 3, 5}, {2}));
  const ProbCover pcover = RandomProbCover(n, 6, rng);
  const std::vector<Index> qx = {0, 1};
  const std::vector<Index> px = {2};
  add("PSCMI", MakeProbSetCoverMutualInformation(
                   pcover, CoveredProbability(pcover, qx)));
  add("PSCCG", MakeProbSetCoverConditionalGain(pcover, pcover.Uncovered(px)));
  add("PSCCMI", MakeProbSetCoverConditionalMutualInformation(
                    pcover, CoveredProbability(pcover, qx), pcover.Uncovered(px)));

  auto fl = std::make_shared<FacilityLocation>(k);
  auto ld = std::make_shared<LogDeterminant>(k);
  add("MI(FL)", std::make_shared<MutualInformation>(fl, Subset{0, 1}));
  add("CG(FL)", std::make_shared<ConditionalGain>(fl, Subset{2, 3}));
  add("CMI(FL)", std::make_shared<ConditionalMutualInformation>(fl, Subset{0, 1},
                                                                Subset{2}));
  add("MI(LogDet)", std::make_shared<MutualInformation>(ld, Subset{0, 1}),
      Curvature::kNone);
  add("CG(LogDet)", std::make_shared<ConditionalGain>(ld, Subset{2, 3}));
  return out;
}

// Largest |memoized - direct| discrepancy over `sequences` random update
// orders, relative to the function's tolerance (<= 1 passes). Covers
// EvalWithMemo vs Evaluate and GainWithMemo vs MarginalGain.
inline double MemoDiscrepancy(const SetFunction& f, int sequences, Rng& rng) {
  double worst = 0.0;
  const double tol = f.Tolerance();
  for (int s = 0; s < sequences; ++s) {
    auto order = RandomPermutation(f.size(), rng);
    std::uniform_int_distribution<std::size_t> len(1, f.size());
    order.resize(len(rng));
    MemoState memo = f.MakeMemo();
    std::vector<Index> so_far;
    for (Index e : order) {
      const Subset a(so_far);
      for (Index c = 0; c < f.size(); ++c) {
        if (a.Contains(c)) continue;
        const double gm = f.GainWithMemo(memo, c);
        const double gd = f.MarginalGain(a, c);
        if (std::isinf(gm) || std::isinf(gd)) {
          if (gm != gd) worst = std::max(worst, 1e300);
          continue;
        }
        worst = std::max(worst, std::fabs(gm - gd) / tol);
      }
      f.UpdateMemo(memo, e);
      so_far.push_back(e);
      const double vm = f.EvalWithMemo(memo);
      const double vd = f.Evaluate(Subset(so_far));
      worst = std::max(worst, std::fabs(vm - vd) / tol);
    }
  }
  return worst;
}

struct Triple {
  Subset a, b;
  Index e;
  double gain_a, gain_b;
};

// Samples A subset B and e not in B; returns the first triple violating the
// requested direction, if any.
inline std::optional<Triple> FindCurvatureViolation(const SetFunction& f,
                                                    Curvature c, int samples,
                                                    Rng& rng) {
  const double tol = f.Tolerance();
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const Subset b = RandomSubset(f.size(), rng, density(rng));
    if (b.size() == f.size()) continue;
    std::vector<Index> am;
    std::bernoulli_distribution keep(density(rng));
    for (Index x : b)
      if (keep(rng)) am.push_back(x);
    const Subset a(am);
    std::vector<Index> outside;
    for (Index x = 0; x < f.size(); ++x)
      if (!b.Contains(x)) outside.push_back(x);
    const Index e = outside[rng() % outside.size()];
    const double ga = f.MarginalGain(a, e);
    const double gb = f.MarginalGain(b, e);
    const bool bad = c == Curvature::kSubmodular     ? ga < gb - tol
                     : c == Curvature::kSupermodular ? ga > gb + tol
                                                     : false;
    if (bad) return Triple{a, b, e, ga, gb};
  }
  return std::nullopt;
}

}  // namespace submodlib::testing

#endif  // SUBMODLIB_TESTS_TEST_UTIL_HPP_
