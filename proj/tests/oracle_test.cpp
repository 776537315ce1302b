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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "submodlib/oracle.hpp"
#include "submodlib/submodlib.hpp"
#include "test_util.hpp"

namespace submodlib {
namespace {

SimilarityKernel SmallKernel() {
  return SimilarityKernel::FromRows({{1, .8, .1}, {.8, 1, .2}, {.1, .2, 1}});
}

TEST(BruteForce, SmallKernelSingleton) {
  FacilityLocation f(SmallKernel());
  auto r = oracle::BruteForceOpt(f, 1);
  EXPECT_EQ(r.best_subset, Subset({1}));
  EXPECT_NEAR(r.best_value, 2.0, 1e-12);
  EXPECT_EQ(r.all_values.size(), 4u);  // empty set plus three singletons
}

TEST(BruteForce, FullBudgetPicksGroundSetForMonotone) {
  testing::Rng rng(1);
  FacilityLocation f(testing::RandomKernel(8, rng));
  auto r = oracle::BruteForceOpt(f, 8);
  EXPECT_EQ(r.best_subset, Subset::Range(8));
  double best = -1.0;
  for (const auto& [s, v] : r.all_values) best = std::max(best, v);
  EXPECT_EQ(best, r.best_value);
}

TEST(BruteForce, ModularOptIsTopSingletons) {
  testing::Rng rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(9);
  for (double& x : w) x = u(rng);
  // Modular: every element covers its own concept.
  ConceptCover c;
  c.num_concepts = 9;
  c.weights = w;
  c.covers.resize(9);
  for (Index i = 0; i < 9; ++i) c.covers[i] = {i};
  SetCover f(c);
  std::vector<Index> order(9);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return w[a] > w[b]; });
  order.resize(4);
  auto r = oracle::BruteForceOpt(f, 4);
  EXPECT_EQ(r.best_subset, Subset(order));
}

TEST(BruteForce, RejectsLargeInstances) {
  testing::Rng rng(3);
  FacilityLocation f(testing::RandomKernel(60, rng));
  EXPECT_THROW(oracle::BruteForceOpt(f, 10), std::invalid_argument);
  EXPECT_THROW(oracle::BruteForceOpt(f, 61), std::invalid_argument);
}

TEST(LinearAlgebra, InverseAndLogDet) {
  oracle::Dense a = {{4, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  auto inv = oracle::Inverse(a);
  auto eye = oracle::Multiply(a, inv);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(eye[i][j], i == j ? 1.0 : 0.0, 1e-12);
  // det = 4*(6-1) - 1*(2-0) = 18
  EXPECT_NEAR(oracle::LogDetLu(a), std::log(18.0), 1e-12);
}

TEST(Agreement, FacilityLocationOnThousandDraws) {
  testing::Rng rng(4);
  for (int draw = 0; draw < 1000; ++draw) {
    const std::size_t n = 3 + rng() % 8;
    auto k = testing::RandomKernel(n, rng, 2);
    FacilityLocation f(k);
    const Subset x = testing::RandomSubset(n, rng);
    EXPECT_NEAR(f.Evaluate(x), oracle::FacilityLocation(testing::ToDense(k), x.members()),
                1e-12);
  }
}

TEST(Agreement, LogDeterminantOnDraws) {
  testing::Rng rng(5);
  for (int draw = 0; draw < 300; ++draw) {
    const std::size_t n = 3 + rng() % 6;
    auto k = testing::RandomKernel(n, rng);
    LogDeterminant f(k);
    const Subset x = testing::RandomSubset(n, rng);
    EXPECT_NEAR(f.Evaluate(x), oracle::LogDeterminant(testing::ToDense(k), 1e-6, x.members()),
                1e-6);
  }
}

TEST(Agreement, FacilityLocationCmiOnDraws) {
  testing::Rng rng(6);
  for (int draw = 0; draw < 300; ++draw) {
    auto j = testing::MakeJoint(7, 2, 2, rng, 0.9, 0.4);
    auto f = FacilityLocationInformation::ConditionalMutualInformation(
        j.ground, j.query, j.privates);
    const Subset x = testing::RandomSubset(7, rng);
    EXPECT_NEAR(f->Evaluate(x),
                oracle::FlCmi(testing::ToDense(j.ground),
                              testing::ToDense(j.query.query_kernel),
                              testing::ToDense(j.privates.private_kernel), 0.9, 0.4,
                              x.members()),
                1e-9);
  }
}

TEST(Agreement, GenericCompositionHelpers) {
  testing::Rng rng(7);
  auto k = testing::RandomKernel(6, rng);
  const auto s = testing::ToDense(k);
  auto fn = [&](const oracle::Elements& x) { return oracle::FacilityLocation(s, x); };
  // I(A; A) = f(A) and f(A | A) = 0.
  const oracle::Elements a = {0, 3};
  EXPECT_NEAR(oracle::MutualInformation(fn, a, a), fn(a), 1e-12);
  EXPECT_NEAR(oracle::ConditionalGain(fn, a, a), 0.0, 1e-12);
  EXPECT_NEAR(oracle::ConditionalMutualInformation(fn, a, {1}, {}),
              oracle::MutualInformation(fn, a, {1}), 1e-12);
}

}  // namespace
}  // namespace submodlib
