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

#ifndef SUBMODLIB_CLUSTERING_HPP_
#define SUBMODLIB_CLUSTERING_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

// Partition of the ground set into k non-empty clusters with dense ids.
class ClusterMap {
 public:
  ClusterMap() = default;
  explicit ClusterMap(std::vector<std::size_t> assignments)
      : assignments_(std::move(assignments)) {
    if (assignments_.empty()) {
      throw std::invalid_argument("cluster map: empty ground set");
    }
    k_ = *std::max_element(assignments_.begin(), assignments_.end()) + 1;
    members_.assign(k_, {});
    local_.resize(assignments_.size());
    for (Index i = 0; i < assignments_.size(); ++i) {
      local_[i] = members_[assignments_[i]].size();
      members_[assignments_[i]].push_back(i);
    }
    for (std::size_t c = 0; c < k_; ++c) {
      if (members_[c].empty()) {
        throw std::invalid_argument("cluster map: cluster " +
                                    std::to_string(c) + " is empty");
      }
    }
  }

  static ClusterMap Single(std::size_t n) {
    return ClusterMap(std::vector<std::size_t>(n, 0));
  }

  std::size_t size() const { return assignments_.size(); }
  std::size_t num_clusters() const { return k_; }
  std::size_t cluster_of(Index i) const { return assignments_[i]; }
  // Position of i inside its cluster's member list.
  Index local_index(Index i) const { return local_[i]; }
  const std::vector<Index>& members(std::size_t c) const { return members_[c]; }
  const std::vector<std::size_t>& assignments() const { return assignments_; }

 private:
  std::vector<std::size_t> assignments_;
  std::vector<std::vector<Index>> members_;
  std::vector<Index> local_;
  std::size_t k_ = 0;
};

// k-means with k-means++ seeding: at most 300 Lloyd iterations, stopping once
// the relative inertia improvement drops below 1e-4. Deterministic per seed.
// Clusters that empty out are re-seeded with the point farthest from its
// centroid, so the returned map never has empty clusters.
inline ClusterMap ClusterGroundSet(const FeatureMatrix& data, std::size_t k,
                                   std::uint64_t seed) {
  const std::size_t n = data.rows();
  const std::size_t dims = data.dims();
  if (k < 1 || k > n) {
    throw std::invalid_argument("clustering: k must be in [1, " +
                                std::to_string(n) + "], got " +
                                std::to_string(k));
  }
  auto sqdist = [&](std::span<const double> x, const double* c) {
    double s = 0.0;
    for (std::size_t d = 0; d < dims; ++d) s += (x[d] - c[d]) * (x[d] - c[d]);
    return s;
  };

  std::mt19937_64 rng(seed);
  std::vector<double> centers(k * dims);
  std::vector<double> closest(n, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(n, 0);

  // k-means++ seeding.
  std::size_t first = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::copy(data.row(first).begin(), data.row(first).end(), centers.begin());
  chosen[first] = 1;
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      closest[i] = std::min(closest[i],
                            sqdist(data.row(i), &centers[(c - 1) * dims]));
      total += closest[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      double r = std::uniform_real_distribution<double>(0.0, total)(rng);
      for (std::size_t i = 0; i < n; ++i) {
        r -= closest[i];
        if (r <= 0.0 && !chosen[i]) {
          pick = i;
          break;
        }
      }
    }
    if (pick == n) {
      // Degenerate (duplicates): first point not yet chosen.
      for (std::size_t i = 0; i < n && pick == n; ++i)
        if (!chosen[i]) pick = i;
    }
    chosen[pick] = 1;
    std::copy(data.row(pick).begin(), data.row(pick).end(),
              centers.begin() + c * dims);
  }

  std::vector<std::size_t> assign(n, 0);
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 300; ++iter) {
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        double d = sqdist(data.row(i), &centers[c * dims]);
        if (d < best) {
          best = d;
          assign[i] = c;
        }
      }
      inertia += best;
    }
    std::vector<double> sums(k * dims, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++counts[assign[i]];
      for (std::size_t d = 0; d < dims; ++d)
        sums[assign[i] * dims + d] += data.row(i)[d];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        // Steal the point farthest from its centroid.
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (counts[assign[i]] <= 1) continue;
          double d = sqdist(data.row(i), &centers[assign[i] * dims]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        --counts[assign[far]];
        for (std::size_t d = 0; d < dims; ++d)
          sums[assign[far] * dims + d] -= data.row(far)[d];
        assign[far] = c;
        counts[c] = 1;
        for (std::size_t d = 0; d < dims; ++d)
          sums[c * dims + d] = data.row(far)[d];
      }
    }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < dims; ++d)
        centers[c * dims + d] = sums[c * dims + d] / counts[c];
    if (previous - inertia <= 1e-4 * std::max(previous, 1e-300) &&
        std::isfinite(previous)) {
      break;
    }
    previous = inertia;
  }
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[assign[i]];
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) {
      throw std::logic_error("clustering: produced an empty cluster");
    }
  }
  return ClusterMap(std::move(assign));
}

}  // namespace submodlib

#endif  // SUBMODLIB_CLUSTERING_HPP_
