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
// Log Determinant
//
//   f(X) = log det(L_X + reg * I),   f(empty) = 0
//
// The memo is an incremental Cholesky factorization in the style of fast
// greedy MAP inference for DPPs: for every element i we keep the row c_i of
// the factor against the selected set and the residual variance
//   d_i^2 = L_ii + reg - |c_i|^2,
// so the marginal gain of i is log(d_i^2) and adding j costs O(n |A|).

#ifndef SUBMODLIB_FUNCTIONS_LOG_DETERMINANT_HPP_
#define SUBMODLIB_FUNCTIONS_LOG_DETERMINANT_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"
#include "submodlib/linalg.hpp"

namespace submodlib {

inline constexpr double kDefaultLogDetRegularization = 1e-6;

struct CholeskyMemo {
  std::vector<std::vector<double>> rows;  // c_i
  std::vector<double> residual;           // d_i^2
  double value = 0.0;
};

// Log-determinant of a fixed symmetric matrix, already regularized.
// Shared by LogDeterminant and the information-measure variants, which all
// reduce to log-determinants of derived n x n matrices.
class LogDetCore {
 public:
  LogDetCore() = default;
  explicit LogDetCore(linalg::Matrix m) : m_(std::move(m)) {}

  std::size_t size() const { return m_.rows; }
  const linalg::Matrix& matrix() const { return m_; }

  double Evaluate(const Subset& x) const {
    linalg::Matrix sub(x.size(), x.size());
    const auto& idx = x.members();
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        sub(a, b) = m_(idx[a], idx[b]);
    try {
      return linalg::LogDetSpd(sub);
    } catch (const linalg::NotPositiveDefinite& err) {
      throw std::domain_error(
          "log-determinant: submatrix not positive definite at element " +
          std::to_string(idx[err.pivot()]));
    }
  }

  CholeskyMemo Initial() const {
    CholeskyMemo memo;
    memo.rows.assign(size(), {});
    memo.residual.resize(size());
    for (Index i = 0; i < size(); ++i) memo.residual[i] = m_(i, i);
    return memo;
  }

  // -infinity when adding e would make the submatrix singular or indefinite.
  double Gain(const CholeskyMemo& memo, Index e) const {
    const double d2 = memo.residual[e];
    if (!(d2 > 0.0)) return -std::numeric_limits<double>::infinity();
    return std::log(d2);
  }

  void Update(CholeskyMemo& memo, const MemoState& state, Index e) const {
    const double d2 = memo.residual[e];
    if (!(d2 > 0.0)) {
      throw std::domain_error(
          "log-determinant: submatrix not positive definite at element " +
          std::to_string(e));
    }
    const double d = std::sqrt(d2);
    const std::vector<double>& ce = memo.rows[e];
    for (Index i = 0; i < size(); ++i) {
      if (i == e || state.Contains(i)) continue;
      std::vector<double>& ci = memo.rows[i];
      double dot = 0.0;
      for (std::size_t k = 0; k < ce.size(); ++k) dot += ce[k] * ci[k];
      const double entry = (m_(e, i) - dot) / d;
      ci.push_back(entry);
      memo.residual[i] -= entry * entry;
    }
    memo.value += std::log(d2);
  }

 private:
  linalg::Matrix m_;
};

inline linalg::Matrix RegularizedMatrix(const SimilarityKernel& kernel,
                                        double reg) {
  if (!std::isfinite(reg) || reg < 0.0) {
    throw std::invalid_argument("log-determinant: reg must be finite and >= 0");
  }
  const std::size_t n = kernel.size();
  linalg::Matrix m(n, n);
  m.data = kernel.ToDenseValues();
  for (Index i = 0; i < n; ++i) m(i, i) += reg;
  return m;
}

class LogDeterminant final : public StatefulFunction<CholeskyMemo> {
 public:
  LogDeterminant(const SimilarityKernel& kernel,
                 double reg = kDefaultLogDetRegularization)
      : StatefulFunction(kernel.size()),
        reg_(reg),
        core_(RegularizedMatrix(kernel, reg)) {}

  std::string Name() const override { return "LogDeterminant"; }
  bool IsMonotone() const override { return false; }
  double Tolerance() const override { return 1e-6; }
  double reg() const { return reg_; }

 protected:
  double DoEvaluate(const Subset& x) const override { return core_.Evaluate(x); }
  CholeskyMemo Initial() const override { return core_.Initial(); }
  double Gain(const CholeskyMemo& m, const MemoState&, Index e) const override {
    return core_.Gain(m, e);
  }
  void Update(CholeskyMemo& m, const MemoState& s, Index e) const override {
    core_.Update(m, s, e);
  }
  double Value(const CholeskyMemo& m, const MemoState&) const override {
    return m.value;
  }

 private:
  double reg_;
  LogDetCore core_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_LOG_DETERMINANT_HPP_
