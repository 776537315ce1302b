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

#ifndef SUBMODLIB_INFORMATION_CONCAVE_OVER_MODULAR_HPP_
#define SUBMODLIB_INFORMATION_CONCAVE_OVER_MODULAR_HPP_

#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/functions/feature_based.hpp"
#include "submodlib/information/context.hpp"

namespace submodlib {

// Concave-over-modular mutual information:
//
//   COM(A) = eta * sum_{i in A} psi(sum_{j in Q} s_ij)
//            + sum_{j in Q} psi(sum_{i in A} s_ij)
//
// Only the V x Q cross kernel is needed. Memo: [sum_{i in A} s_ij, j in Q].
class ConcaveOverModular final : public StatefulFunction<std::vector<double>> {
 public:
  ConcaveOverModular(const QueryContext& q, Concave psi)
      : StatefulFunction(q.query_kernel.rows()),
        cross_(q.query_kernel),
        psi_(psi) {
    detail::CheckScale(q.eta, "eta");
    relevance_ = RowSum(cross_);
    for (double& r : relevance_) r = q.eta * ApplyConcave(psi_, r);
  }

  std::string Name() const override { return "ConcaveOverModular"; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    std::vector<double> mass(cross_.cols(), 0.0);
    double total = 0.0;
    for (Index i : x) {
      total += relevance_[i];
      for (std::size_t j = 0; j < cross_.cols(); ++j) mass[j] += cross_(i, j);
    }
    for (double m : mass) total += ApplyConcave(psi_, m);
    return total;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(cross_.cols(), 0.0);
  }
  double Gain(const std::vector<double>& mass, const MemoState&,
              Index e) const override {
    double gain = relevance_[e];
    auto r = cross_.row(e);
    for (std::size_t j = 0; j < r.size(); ++j)
      gain += ApplyConcave(psi_, mass[j] + r[j]) - ApplyConcave(psi_, mass[j]);
    return gain;
  }
  void Update(std::vector<double>& mass, const MemoState&,
              Index e) const override {
    auto r = cross_.row(e);
    for (std::size_t j = 0; j < r.size(); ++j) mass[j] += r[j];
  }
  double Value(const std::vector<double>& mass,
               const MemoState& memo) const override {
    double total = 0.0;
    for (Index i : memo.order()) total += relevance_[i];
    for (double m : mass) total += ApplyConcave(psi_, m);
    return total;
  }

 private:
  CrossKernel cross_;
  Concave psi_;
  std::vector<double> relevance_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_CONCAVE_OVER_MODULAR_HPP_
