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

#ifndef SUBMODLIB_FUNCTIONS_CLUSTERED_HPP_
#define SUBMODLIB_FUNCTIONS_CLUSTERED_HPP_

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/clustering.hpp"
#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

// Mixture f(A) = sum_l f_l(A cap C_l), where f_l lives on cluster C_l as its
// own ground set (local indices follow ClusterMap::members order).
class ClusteredFunction final : public StatefulFunction<std::vector<MemoState>> {
 public:
  ClusteredFunction(ClusterMap clusters,
                    std::vector<std::unique_ptr<SetFunction>> parts)
      : StatefulFunction(clusters.size()),
        clusters_(std::move(clusters)),
        parts_(std::move(parts)) {
    if (parts_.size() != clusters_.num_clusters()) {
      throw std::invalid_argument("clustered function: expected " +
                                  std::to_string(clusters_.num_clusters()) +
                                  " component functions, got " +
                                  std::to_string(parts_.size()));
    }
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      if (!parts_[c] || parts_[c]->size() != clusters_.members(c).size()) {
        throw std::invalid_argument(
            "clustered function: component " + std::to_string(c) +
            " does not match cluster size " +
            std::to_string(clusters_.members(c).size()));
      }
    }
  }

  std::string Name() const override {
    return "Clustered(" + parts_.front()->Name() + ")";
  }
  bool IsSubmodular() const override {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const auto& p) { return p->IsSubmodular(); });
  }
  bool IsMonotone() const override {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const auto& p) { return p->IsMonotone(); });
  }
  double Tolerance() const override {
    double t = 0.0;
    for (const auto& p : parts_) t = std::max(t, p->Tolerance());
    return t;
  }

  const ClusterMap& clusters() const { return clusters_; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    std::vector<std::vector<Index>> local(parts_.size());
    for (Index e : x)
      local[clusters_.cluster_of(e)].push_back(clusters_.local_index(e));
    double total = 0.0;
    for (std::size_t c = 0; c < parts_.size(); ++c)
      total += parts_[c]->Evaluate(Subset(std::move(local[c])));
    return total;
  }

  std::vector<MemoState> Initial() const override {
    std::vector<MemoState> memos;
    memos.reserve(parts_.size());
    for (const auto& p : parts_) memos.push_back(p->MakeMemo());
    return memos;
  }
  double Gain(const std::vector<MemoState>& memos, const MemoState&,
              Index e) const override {
    const std::size_t c = clusters_.cluster_of(e);
    return parts_[c]->GainWithMemo(memos[c], clusters_.local_index(e));
  }
  void Update(std::vector<MemoState>& memos, const MemoState&,
              Index e) const override {
    const std::size_t c = clusters_.cluster_of(e);
    parts_[c]->UpdateMemo(memos[c], clusters_.local_index(e));
  }
  double Value(const std::vector<MemoState>& memos,
               const MemoState&) const override {
    double total = 0.0;
    for (std::size_t c = 0; c < parts_.size(); ++c)
      total += parts_[c]->EvalWithMemo(memos[c]);
    return total;
  }

 private:
  ClusterMap clusters_;
  std::vector<std::unique_ptr<SetFunction>> parts_;
};

using KernelFunctionFactory =
    std::function<std::unique_ptr<SetFunction>(const SimilarityKernel&)>;

// Builds one component per cluster from the cluster's slice of `full`.
inline std::unique_ptr<ClusteredFunction> MakeClusteredFunction(
    const ClusterMap& clusters, const SimilarityKernel& full,
    const KernelFunctionFactory& factory) {
  if (full.size() != clusters.size()) {
    throw std::invalid_argument(
        "clustered function: kernel/cluster map size mismatch");
  }
  std::vector<std::unique_ptr<SetFunction>> parts;
  for (std::size_t c = 0; c < clusters.num_clusters(); ++c)
    parts.push_back(factory(full.Submatrix(clusters.members(c))));
  return std::make_unique<ClusteredFunction>(clusters, std::move(parts));
}

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_CLUSTERED_HPP_
