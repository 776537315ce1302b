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
// Facility Location
//
//   f(X) = sum_{i in U} max_{j in X} s_ij
//
// Modes:
//   dense      U = V, full n x n kernel.
//   sparse     U = V, kNN kernel; missing entries are 0.
//   separate   explicit represented set U with a |U| x n cross kernel.
//   clustered  f(X) = sum_l sum_{i in C_l} max_{j in X cap C_l} s_ij, with one
//              dense kernel per cluster in cluster-local indices.
//
// Memo: [max_{j in A} s_ij, i in U].

#ifndef SUBMODLIB_FUNCTIONS_FACILITY_LOCATION_HPP_
#define SUBMODLIB_FUNCTIONS_FACILITY_LOCATION_HPP_

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/clustering.hpp"
#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

class FacilityLocation final : public StatefulFunction<std::vector<double>> {
 public:
  enum class Mode { kDense, kSparse, kSeparate, kClustered };

  // Dense or sparse, depending on the kernel's storage.
  explicit FacilityLocation(SimilarityKernel kernel)
      : StatefulFunction(kernel.size()),
        mode_(kernel.IsDense() ? Mode::kDense : Mode::kSparse),
        kernel_(std::move(kernel)),
        represented_(size()) {}

  // Separate represented set: `cross` is |U| x n.
  explicit FacilityLocation(const CrossKernel& cross)
      : StatefulFunction(cross.cols()),
        mode_(Mode::kSeparate),
        by_element_(cross.Transposed()),
        represented_(cross.rows()) {}

  // Clustered mode; kernels[l] is indexed by local position in cluster l.
  FacilityLocation(ClusterMap clusters, std::vector<SimilarityKernel> kernels)
      : StatefulFunction(clusters.size()),
        mode_(Mode::kClustered),
        clusters_(std::move(clusters)),
        cluster_kernels_(std::move(kernels)),
        represented_(size()) {
    if (cluster_kernels_.size() != clusters_->num_clusters()) {
      throw std::invalid_argument(
          "clustered facility location: expected " +
          std::to_string(clusters_->num_clusters()) + " kernels, got " +
          std::to_string(cluster_kernels_.size()));
    }
    for (std::size_t c = 0; c < cluster_kernels_.size(); ++c) {
      if (cluster_kernels_[c].size() != clusters_->members(c).size()) {
        throw std::invalid_argument(
            "clustered facility location: kernel " + std::to_string(c) +
            " has size " + std::to_string(cluster_kernels_[c].size()) +
            " but cluster has " +
            std::to_string(clusters_->members(c).size()) + " elements");
      }
      if (!cluster_kernels_[c].IsDense()) {
        cluster_kernels_[c] = SimilarityKernel::Dense(
            cluster_kernels_[c].size(), cluster_kernels_[c].ToDenseValues());
      }
    }
  }

  // Clustered mode, slicing per-cluster kernels out of a full kernel.
  static std::unique_ptr<FacilityLocation> Clustered(const ClusterMap& clusters,
                                    const SimilarityKernel& full) {
    if (full.size() != clusters.size()) {
      throw std::invalid_argument(
          "clustered facility location: kernel/cluster map size mismatch");
    }
    std::vector<SimilarityKernel> kernels;
    for (std::size_t c = 0; c < clusters.num_clusters(); ++c)
      kernels.push_back(full.Submatrix(clusters.members(c)));
    return std::make_unique<FacilityLocation>(clusters, std::move(kernels));
  }

  Mode mode() const { return mode_; }
  std::string Name() const override { return "FacilityLocation"; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double total = 0.0;
    switch (mode_) {
      case Mode::kDense:
      case Mode::kSparse:
        for (Index i = 0; i < size(); ++i) {
          double best = 0.0;
          for (Index j : x) best = std::max(best, kernel_(i, j));
          total += best;
        }
        break;
      case Mode::kSeparate:
        for (Index u = 0; u < represented_; ++u) {
          double best = 0.0;
          for (Index j : x) best = std::max(best, by_element_(j, u));
          total += best;
        }
        break;
      case Mode::kClustered:
        for (Index i = 0; i < size(); ++i) {
          const std::size_t c = clusters_->cluster_of(i);
          double best = 0.0;
          for (Index j : x) {
            if (clusters_->cluster_of(j) != c) continue;
            best = std::max(best, cluster_kernels_[c](clusters_->local_index(i),
                                                      clusters_->local_index(j)));
          }
          total += best;
        }
        break;
    }
    return total;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(represented_, 0.0);
  }

  double Gain(const std::vector<double>& best, const MemoState&,
              Index e) const override {
    double gain = 0.0;
    ForEachSimilarity(e, [&](Index i, double s) {
      if (s > best[i]) gain += s - best[i];
    });
    return gain;
  }

  void Update(std::vector<double>& best, const MemoState&,
              Index e) const override {
    ForEachSimilarity(e, [&](Index i, double s) {
      if (s > best[i]) best[i] = s;
    });
  }

  double Value(const std::vector<double>& best,
               const MemoState&) const override {
    double total = 0.0;
    for (double b : best) total += b;
    return total;
  }

 private:
  // Calls fn(i, s_ie) for every represented i that e can cover.
  template <typename Fn>
  void ForEachSimilarity(Index e, Fn&& fn) const {
    switch (mode_) {
      case Mode::kDense: {
        auto r = kernel_.row(e);
        for (Index i = 0; i < r.size(); ++i) fn(i, r[i]);
        break;
      }
      case Mode::kSparse:
        for (const Neighbor& nb : kernel_.neighbors(e)) fn(nb.index, nb.similarity);
        break;
      case Mode::kSeparate: {
        auto r = by_element_.row(e);
        for (Index u = 0; u < r.size(); ++u) fn(u, r[u]);
        break;
      }
      case Mode::kClustered: {
        const std::size_t c = clusters_->cluster_of(e);
        const auto& members = clusters_->members(c);
        auto r = cluster_kernels_[c].row(clusters_->local_index(e));
        for (Index li = 0; li < members.size(); ++li) fn(members[li], r[li]);
        break;
      }
    }
  }

  Mode mode_;
  SimilarityKernel kernel_;
  CrossKernel by_element_;  // n x |U|
  std::optional<ClusterMap> clusters_;
  std::vector<SimilarityKernel> cluster_kernels_;
  std::size_t represented_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_FACILITY_LOCATION_HPP_
