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

#ifndef SUBMODLIB_FUNCTIONS_SET_COVER_HPP_
#define SUBMODLIB_FUNCTIONS_SET_COVER_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submodlib/core.hpp"

namespace submodlib {

// Deterministic concept cover: element x covers the concepts covers[x].
struct ConceptCover {
  std::size_t num_concepts = 0;
  std::vector<double> weights;
  std::vector<std::vector<std::size_t>> covers;

  void Validate() const {
    if (weights.size() != num_concepts) {
      throw std::invalid_argument("concept cover: " +
                                  std::to_string(weights.size()) +
                                  " weights for " +
                                  std::to_string(num_concepts) + " concepts");
    }
    for (double w : weights) {
      if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument("concept cover: weights must be finite and >= 0");
    }
    for (std::size_t x = 0; x < covers.size(); ++x) {
      for (std::size_t u : covers[x]) {
        if (u >= num_concepts) {
          throw std::invalid_argument("concept cover: element " +
                                      std::to_string(x) + " covers concept " +
                                      std::to_string(u) + " >= " +
                                      std::to_string(num_concepts));
        }
      }
    }
  }
};

struct SetCoverMemo {
  std::vector<char> covered;
  double value = 0.0;
};

// f(X) = sum_{u in C} w_u * min(c_u(X), 1)
// Memo: the set of concepts covered by A.
class SetCover final : public StatefulFunction<SetCoverMemo> {
 public:
  explicit SetCover(ConceptCover cover, std::string name = "SetCover")
      : StatefulFunction(cover.covers.size()),
        cover_(std::move(cover)),
        name_(std::move(name)) {
    cover_.Validate();
    for (auto& c : cover_.covers) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
  }

  std::string Name() const override { return name_; }
  const ConceptCover& cover() const { return cover_; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    std::vector<char> hit(cover_.num_concepts, 0);
    for (Index e : x)
      for (std::size_t u : cover_.covers[e]) hit[u] = 1;
    double total = 0.0;
    for (std::size_t u = 0; u < cover_.num_concepts; ++u)
      if (hit[u]) total += cover_.weights[u];
    return total;
  }

  SetCoverMemo Initial() const override {
    return {std::vector<char>(cover_.num_concepts, 0), 0.0};
  }
  double Gain(const SetCoverMemo& memo, const MemoState&,
              Index e) const override {
    double gain = 0.0;
    for (std::size_t u : cover_.covers[e])
      if (!memo.covered[u]) gain += cover_.weights[u];
    return gain;
  }
  void Update(SetCoverMemo& memo, const MemoState& state,
              Index e) const override {
    memo.value += Gain(memo, state, e);
    for (std::size_t u : cover_.covers[e]) memo.covered[u] = 1;
  }
  double Value(const SetCoverMemo& memo, const MemoState&) const override {
    return memo.value;
  }

 private:
  ConceptCover cover_;
  std::string name_;
};

// Probabilistic cover: probs[x] lists (concept, p_xu) pairs.
struct ProbCover {
  std::size_t num_concepts = 0;
  std::vector<double> weights;
  std::vector<std::vector<std::pair<std::size_t, double>>> probs;

  void Validate() const {
    if (weights.size() != num_concepts) {
      throw std::invalid_argument("probabilistic cover: " +
                                  std::to_string(weights.size()) +
                                  " weights for " +
                                  std::to_string(num_concepts) + " concepts");
    }
    for (double w : weights) {
      if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument(
            "probabilistic cover: weights must be finite and >= 0");
    }
    for (std::size_t x = 0; x < probs.size(); ++x) {
      for (auto [u, p] : probs[x]) {
        if (u >= num_concepts) {
          throw std::invalid_argument("probabilistic cover: element " +
                                      std::to_string(x) + " names concept " +
                                      std::to_string(u) + " >= " +
                                      std::to_string(num_concepts));
        }
        if (!(p >= 0.0 && p <= 1.0)) {
          throw std::invalid_argument("probabilistic cover: element " +
                                      std::to_string(x) +
                                      " has probability outside [0, 1]");
        }
      }
    }
  }

  // Per-concept probability that no element of `which` covers it.
  std::vector<double> Uncovered(const std::vector<Index>& which) const {
    std::vector<double> out(num_concepts, 1.0);
    for (Index x : which)
      for (auto [u, p] : probs[x]) out[u] *= 1.0 - p;
    return out;
  }
};

// f(X) = sum_u w_u (1 - prod_{x in X} (1 - p_xu))
// Memo: [prod_{k in A} (1 - p_ku), u in concepts].
class ProbabilisticSetCover final : public StatefulFunction<std::vector<double>> {
 public:
  explicit ProbabilisticSetCover(ProbCover cover,
                                 std::string name = "ProbabilisticSetCover")
      : StatefulFunction(cover.probs.size()),
        cover_(std::move(cover)),
        name_(std::move(name)) {
    cover_.Validate();
  }

  std::string Name() const override { return name_; }
  const ProbCover& cover() const { return cover_; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    std::vector<double> miss = cover_.Uncovered(x.members());
    double total = 0.0;
    for (std::size_t u = 0; u < cover_.num_concepts; ++u)
      total += cover_.weights[u] * (1.0 - miss[u]);
    return total;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(cover_.num_concepts, 1.0);
  }
  double Gain(const std::vector<double>& miss, const MemoState&,
              Index e) const override {
    double gain = 0.0;
    for (auto [u, p] : cover_.probs[e]) gain += cover_.weights[u] * miss[u] * p;
    return gain;
  }
  void Update(std::vector<double>& miss, const MemoState&,
              Index e) const override {
    for (auto [u, p] : cover_.probs[e]) miss[u] *= 1.0 - p;
  }
  double Value(const std::vector<double>& miss,
               const MemoState&) const override {
    double total = 0.0;
    for (std::size_t u = 0; u < cover_.num_concepts; ++u)
      total += cover_.weights[u] * (1.0 - miss[u]);
    return total;
  }

 private:
  ProbCover cover_;
  std::string name_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_SET_COVER_HPP_
