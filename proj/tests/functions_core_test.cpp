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

#include <memory>
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

std::shared_ptr<const SetFunction> SmallFl() {
  return std::make_shared<FacilityLocation>(SmallKernel());
}

TEST(Subset, RejectsDuplicates) {
  EXPECT_THROW(Subset({1, 2, 1}), std::invalid_argument);
  EXPECT_EQ(Subset({3, 1}).members(), (std::vector<Index>{1, 3}));
}

TEST(SetFunction, EmptySetIsZero) {
  for (const auto& c : testing::Catalog(8, 1)) {
    EXPECT_EQ(c.f->Evaluate({}), 0.0) << c.name;
    EXPECT_EQ(c.f->EvalWithMemo(c.f->MakeMemo()), 0.0) << c.name;
  }
}

TEST(SetFunction, GainAtEmptySetIsSingletonValue) {
  for (const auto& c : testing::Catalog(8, 2))
    for (Index e = 0; e < 8; ++e)
      EXPECT_NEAR(c.f->MarginalGain({}, e), c.f->Evaluate({e}), c.f->Tolerance())
          << c.name << " e=" << e;
}

TEST(SetFunction, RangeAndMembershipErrors) {
  auto f = SmallFl();
  EXPECT_THROW(f->Evaluate({0, 3}), std::out_of_range);
  EXPECT_THROW(f->MarginalGain({0}, 0), std::invalid_argument);
  EXPECT_THROW(f->MarginalGain({0}, 7), std::out_of_range);
  MemoState m = f->MakeMemo();
  f->UpdateMemo(m, 1);
  EXPECT_THROW(f->UpdateMemo(m, 1), std::invalid_argument);
  EXPECT_THROW(f->GainWithMemo(m, 1), std::invalid_argument);
}

TEST(SetFunction, StaleMemoRejected) {
  auto f = SmallFl();
  auto g = SmallFl();
  MemoState m = f->MakeMemo();
  EXPECT_THROW(g->GainWithMemo(m, 0), std::logic_error);
  EXPECT_THROW(g->UpdateMemo(m, 0), std::logic_error);
  EXPECT_THROW(g->EvalWithMemo(m), std::logic_error);
}

TEST(SetFunction, FacilityLocationMemoTracksRowMaxima) {
  // After adding 0 the statistic is [1.0, 0.8, 0.1]; each remaining gain is
  // sum_i max(0, s_ie - stat_i).
  FacilityLocation f(SmallKernel());
  MemoState m = f.MakeMemo();
  f.UpdateMemo(m, 0);
  EXPECT_NEAR(f.EvalWithMemo(m), 1.0 + 0.8 + 0.1, 1e-12);
  EXPECT_NEAR(f.GainWithMemo(m, 1), (1 - 0.8) + (0.2 - 0.1), 1e-12);
  EXPECT_NEAR(f.GainWithMemo(m, 2), 1 - 0.1, 1e-12);
  EXPECT_EQ(m.order(), std::vector<Index>{0});
}

TEST(SetFunction, MemoForMatchesEvaluate) {
  testing::Rng rng(5);
  for (const auto& c : testing::Catalog(9, 3)) {
    for (int t = 0; t < 20; ++t) {
      Subset a = testing::RandomSubset(9, rng);
      EXPECT_NEAR(c.f->EvalWithMemo(c.f->MemoFor(a)), c.f->Evaluate(a),
                  c.f->Tolerance())
          << c.name;
    }
  }
}

TEST(Generic, ConditionalGainExamples) {
  auto f = SmallFl();
  ConditionalGain g(f, {1});
  EXPECT_NEAR(g.Evaluate({0}), 0.2, 1e-12);
  EXPECT_NEAR(g.Evaluate({1}), 0.0, 1e-12);
  ConditionalGain none(f, {});
  for (unsigned mask = 0; mask < 8; ++mask) {
    Subset a = Subset::FromMask(mask);
    EXPECT_NEAR(none.Evaluate(a), f->Evaluate(a), 1e-12);
  }
}

TEST(Generic, MutualInformationExamples) {
  auto f = SmallFl();
  MutualInformation g(f, {1});
  EXPECT_NEAR(g.Evaluate({0}), 1.7, 1e-12);
  EXPECT_NEAR(g.Evaluate({1}), f->Evaluate({1}), 1e-12);
  MutualInformation none(f, {});
  for (unsigned mask = 0; mask < 8; ++mask)
    EXPECT_NEAR(none.Evaluate(Subset::FromMask(mask)), 0.0, 1e-12);
}

TEST(Generic, ConditionalMutualInformationReductions) {
  testing::Rng rng(7);
  auto f = std::make_shared<FacilityLocation>(testing::RandomKernel(6, rng));
  ConditionalMutualInformation no_p(f, {0, 2}, {});
  MutualInformation mi(f, {0, 2});
  ConditionalMutualInformation no_q(f, {}, {1});
  ConditionalMutualInformation full(f, Subset::Range(6), {1, 4});
  ConditionalGain cg(f, {1, 4});
  ConditionalMutualInformation cmi(f, {0, 3}, {5});
  auto fn = [&](const std::vector<Index>& x) { return f->Evaluate(Subset(x)); };
  for (unsigned mask = 0; mask < 64; ++mask) {
    Subset a = Subset::FromMask(mask);
    EXPECT_NEAR(no_p.Evaluate(a), mi.Evaluate(a), 1e-12);
    EXPECT_NEAR(no_q.Evaluate(a), 0.0, 1e-12);
    EXPECT_NEAR(full.Evaluate(a), cg.Evaluate(a), 1e-12);
    EXPECT_NEAR(cmi.Evaluate(a),
                oracle::ConditionalMutualInformation(fn, a.members(), {0, 3}, {5}),
                1e-12);
  }
}

TEST(Generic, InheritsFlags) {
  auto dsum = std::make_shared<DisparitySum>(SmallKernel());
  EXPECT_FALSE(ConditionalGain(dsum, {0}).IsSubmodular());
  EXPECT_TRUE(MutualInformation(SmallFl(), {0}).IsSubmodular());
  EXPECT_THROW(MutualInformation(SmallFl(), {5}), std::out_of_range);
}

TEST(SetFunction, MemoEqualityOnCatalog) {
  testing::Rng rng(11);
  for (const auto& c : testing::Catalog(8, 4))
    EXPECT_LE(testing::MemoDiscrepancy(*c.f, 10, rng), 1.0) << c.name;
}

}  // namespace
}  // namespace submodlib
