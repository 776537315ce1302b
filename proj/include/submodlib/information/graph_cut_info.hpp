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

#ifndef SUBMODLIB_INFORMATION_GRAPH_CUT_INFO_HPP_
#define SUBMODLIB_INFORMATION_GRAPH_CUT_INFO_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/information/context.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

// GCMI(A) = 2 lambda sum_{i in A} sum_{j in Q} s_ij
//
// Modular in A. The query trade-off eta does not enter this form, so the
// context's eta is ignored. Memo: the running double sum.
class GraphCutMutualInformation final : public StatefulFunction<double> {
 public:
  GraphCutMutualInformation(double lambda, const QueryContext& q)
      : StatefulFunction(q.query_kernel.rows()), lambda_(lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
      throw std::invalid_argument("lambda must be finite and >= 0");
    }
    weight_ = RowSum(q.query_kernel);
    for (double& w : weight_) w *= 2.0 * lambda_;
  }

  std::string Name() const override { return "GraphCutMutualInformation"; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double total = 0.0;
    for (Index j : x) total += weight_[j];
    return total;
  }
  double DoMarginalGain(const Subset&, Index e) const override {
    return weight_[e];
  }
  double Initial() const override { return 0.0; }
  double Gain(const double&, const MemoState&, Index e) const override {
    return weight_[e];
  }
  void Update(double& total, const MemoState&, Index e) const override {
    total += weight_[e];
  }
  double Value(const double& total, const MemoState&) const override {
    return total;
  }

 private:
  double lambda_;
  std::vector<double> weight_;
};

// GCCG(A) = f_lambda(A) - 2 lambda nu sum_{i in A, j in P} s_ij
// with f_lambda the graph cut over V. Memo: [sum_{j in A} s_ij, i in V].
class GraphCutConditionalGain final : public StatefulFunction<std::vector<double>> {
 public:
  GraphCutConditionalGain(const SimilarityKernel& kernel, double lambda,
                          const PrivateContext& p)
      : StatefulFunction(kernel.size()),
        lambda_(lambda),
        kernel_(kernel.ToDenseValues()),
        column_mass_(size(), 0.0) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
      throw std::invalid_argument("lambda must be finite and >= 0");
    }
    p.Validate(size());
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) column_mass_[j] += At(i, j);
    private_penalty_ = RowSum(p.private_kernel);
    for (double& v : private_penalty_) v *= 2.0 * lambda_ * p.nu;
  }

  std::string Name() const override { return "GraphCutConditionalGain"; }
  bool IsMonotone() const override { return false; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double total = 0.0;
    for (Index j : x) {
      total += column_mass_[j] - private_penalty_[j];
      for (Index k : x) total -= lambda_ * At(j, k);
    }
    return total;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(size(), 0.0);
  }
  double Gain(const std::vector<double>& mass, const MemoState&,
              Index e) const override {
    return column_mass_[e] - lambda_ * (2.0 * mass[e] + At(e, e)) -
           private_penalty_[e];
  }
  void Update(std::vector<double>& mass, const MemoState&,
              Index e) const override {
    for (Index i = 0; i < size(); ++i) mass[i] += At(e, i);
  }
  double Value(const std::vector<double>& mass,
               const MemoState& memo) const override {
    double total = 0.0;
    for (Index j : memo.order())
      total += column_mass_[j] - private_penalty_[j] - lambda_ * mass[j];
    return total;
  }

 private:
  double At(Index i, Index j) const { return kernel_[i * size() + j]; }

  double lambda_;
  std::vector<double> kernel_;
  std::vector<double> column_mass_;
  std::vector<double> private_penalty_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_GRAPH_CUT_INFO_HPP_
