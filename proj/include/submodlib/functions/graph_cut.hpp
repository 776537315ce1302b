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

#ifndef SUBMODLIB_FUNCTIONS_GRAPH_CUT_HPP_
#define SUBMODLIB_FUNCTIONS_GRAPH_CUT_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

// f(X) = sum_{i in U, j in X} s_ij - lambda * sum_{i, j in X} s_ij
//
// The penalty runs over ordered pairs and includes i == j. Submodular for any
// lambda >= 0; monotone for lambda <= 0.5 when U = V.
// Memo: [sum_{j in A} s_ij, i in V].
class GraphCut final : public StatefulFunction<std::vector<double>> {
 public:
  GraphCut(const SimilarityKernel& kernel, double lambda)
      : StatefulFunction(kernel.size()),
        lambda_(lambda),
        kernel_(kernel.ToDenseValues()),
        column_mass_(size(), 0.0) {
    CheckLambda();
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) column_mass_[j] += At(i, j);
  }

  // Separate represented set: `represented` is |U| x n and drives the first
  // term; `kernel` (n x n) drives the penalty.
  GraphCut(const SimilarityKernel& kernel, const CrossKernel& represented,
           double lambda)
      : StatefulFunction(kernel.size()),
        lambda_(lambda),
        kernel_(kernel.ToDenseValues()),
        column_mass_(size(), 0.0),
        separate_(true) {
    CheckLambda();
    if (represented.cols() != size()) {
      throw std::invalid_argument("graph cut: represented kernel has " +
                                  std::to_string(represented.cols()) +
                                  " columns, expected " +
                                  std::to_string(size()));
    }
    for (Index u = 0; u < represented.rows(); ++u)
      for (Index j = 0; j < size(); ++j) column_mass_[j] += represented(u, j);
  }

  std::string Name() const override { return "GraphCut"; }
  bool IsMonotone() const override { return !separate_ && lambda_ <= 0.5; }
  double lambda() const { return lambda_; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double coverage = 0.0, penalty = 0.0;
    for (Index j : x) {
      coverage += column_mass_[j];
      for (Index k : x) penalty += At(j, k);
    }
    return coverage - lambda_ * penalty;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(size(), 0.0);
  }
  double Gain(const std::vector<double>& mass, const MemoState&,
              Index e) const override {
    return column_mass_[e] - lambda_ * (2.0 * mass[e] + At(e, e));
  }
  void Update(std::vector<double>& mass, const MemoState&,
              Index e) const override {
    const double* r = &kernel_[e * size()];
    for (Index i = 0; i < size(); ++i) mass[i] += r[i];
  }
  double Value(const std::vector<double>& mass,
               const MemoState& memo) const override {
    double coverage = 0.0, penalty = 0.0;
    for (Index j : memo.order()) {
      coverage += column_mass_[j];
      penalty += mass[j];
    }
    return coverage - lambda_ * penalty;
  }

 private:
  void CheckLambda() const {
    if (!std::isfinite(lambda_) || lambda_ < 0.0) {
      throw std::invalid_argument("graph cut: lambda must be finite and >= 0");
    }
  }
  double At(Index i, Index j) const { return kernel_[i * size() + j]; }

  double lambda_;
  std::vector<double> kernel_;
  std::vector<double> column_mass_;
  bool separate_ = false;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_GRAPH_CUT_HPP_
