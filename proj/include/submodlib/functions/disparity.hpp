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
// Dispersion functions over distances d_ij = 1 - s_ij, taken over unordered
// pairs of distinct elements. Both are 0 on sets with fewer than two elements.
//
//   DisparityMin(X) = min_{i < j in X} d_ij     (not submodular)
//   DisparitySum(X) = sum_{i < j in X} d_ij     (supermodular)

#ifndef SUBMODLIB_FUNCTIONS_DISPARITY_HPP_
#define SUBMODLIB_FUNCTIONS_DISPARITY_HPP_

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

namespace detail {

class DistanceView {
 public:
  explicit DistanceView(const SimilarityKernel& kernel)
      : n_(kernel.size()), s_(kernel.ToDenseValues()) {}
  double operator()(Index i, Index j) const { return 1.0 - s_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> s_;
};

}  // namespace detail

struct DisparityMinMemo {
  std::vector<double> nearest;  // min_{k in A} d_ik
  double min_pair = std::numeric_limits<double>::infinity();
};

class DisparityMin final : public StatefulFunction<DisparityMinMemo> {
 public:
  explicit DisparityMin(const SimilarityKernel& kernel)
      : StatefulFunction(kernel.size()), d_(kernel) {}

  std::string Name() const override { return "DisparityMin"; }
  bool IsSubmodular() const override { return false; }
  bool IsMonotone() const override { return false; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    if (x.size() < 2) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto& m = x.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b)
        best = std::min(best, d_(m[a], m[b]));
    return best;
  }

  DisparityMinMemo Initial() const override {
    DisparityMinMemo memo;
    memo.nearest.assign(size(), std::numeric_limits<double>::infinity());
    return memo;
  }
  double Gain(const DisparityMinMemo& memo, const MemoState& state,
              Index e) const override {
    if (state.size() == 0) return 0.0;
    const double after = std::min(memo.min_pair, memo.nearest[e]);
    return after - (state.size() < 2 ? 0.0 : memo.min_pair);
  }
  void Update(DisparityMinMemo& memo, const MemoState& state,
              Index e) const override {
    if (state.size() >= 1) memo.min_pair = std::min(memo.min_pair, memo.nearest[e]);
    for (Index i = 0; i < size(); ++i)
      memo.nearest[i] = std::min(memo.nearest[i], d_(i, e));
  }
  double Value(const DisparityMinMemo& memo,
               const MemoState& state) const override {
    return state.size() < 2 ? 0.0 : memo.min_pair;
  }

 private:
  detail::DistanceView d_;
};

class DisparitySum final : public StatefulFunction<std::vector<double>> {
 public:
  explicit DisparitySum(const SimilarityKernel& kernel)
      : StatefulFunction(kernel.size()), d_(kernel) {}

  std::string Name() const override { return "DisparitySum"; }
  bool IsSubmodular() const override { return false; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double total = 0.0;
    const auto& m = x.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) total += d_(m[a], m[b]);
    return total;
  }

  // Memo: [sum_{k in A} d_ik, i in V].
  std::vector<double> Initial() const override {
    return std::vector<double>(size(), 0.0);
  }
  double Gain(const std::vector<double>& sums, const MemoState&,
              Index e) const override {
    return sums[e];
  }
  void Update(std::vector<double>& sums, const MemoState&,
              Index e) const override {
    for (Index i = 0; i < size(); ++i) sums[i] += d_(i, e);
  }
  double Value(const std::vector<double>& sums,
               const MemoState& state) const override {
    double total = 0.0;
    for (Index j : state.order()) total += sums[j];
    return 0.5 * total;
  }

 private:
  detail::DistanceView d_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_DISPARITY_HPP_
