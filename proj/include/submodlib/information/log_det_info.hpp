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
// Log-determinant information measures.
//
// With M = S + reg I over V, every measure here is log det(X_A) or
// log det(X_A) - log det(Y_A) for n x n matrices X, Y fixed at construction:
//
//   LogDetMI(A)  = log det(M_A) - log det(M_A - eta^2 C_Q (S_Q + reg I)^-1 C_Q^T)
//   LogDetCG(A)  = log det(M_A - nu^2 C_P (S_P + reg I)^-1 C_P^T)
//   LogDetCMI(A) = MI with respect to Q of the conditional-gain function,
//                  i.e. both terms are taken on the kernel K over V u Q
//                  obtained by conditioning on P (a Schur complement).
//
// C_Q and C_P are the V x Q and V x P cross kernels. Each log det term keeps
// its own incremental Cholesky memo.

#ifndef SUBMODLIB_INFORMATION_LOG_DET_INFO_HPP_
#define SUBMODLIB_INFORMATION_LOG_DET_INFO_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/functions/log_determinant.hpp"
#include "submodlib/information/context.hpp"
#include "submodlib/linalg.hpp"

namespace submodlib {

namespace detail {

inline linalg::Matrix ToMatrix(const CrossKernel& k, double scale) {
  linalg::Matrix m(k.rows(), k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) m(i, j) = scale * k(i, j);
  return m;
}

inline linalg::Matrix RegularizedSquare(const SimilarityKernel& k, double reg) {
  linalg::Matrix m(k.size(), k.size());
  m.data = k.ToDenseValues();
  for (std::size_t i = 0; i < k.size(); ++i) m(i, i) += reg;
  return m;
}

// a - B^T G^{-1} B, with `what` naming G in error messages.
inline linalg::Matrix SchurComplement(const linalg::Matrix& a,
                                      const linalg::Matrix& g,
                                      linalg::Matrix b, const char* what) {
  if (g.rows == 0) return a;
  linalg::Matrix q;
  try {
    q = linalg::QuadraticFormInverse(g, std::move(b));
  } catch (const linalg::NotPositiveDefinite&) {
    throw std::domain_error(std::string(what) +
                            " kernel is singular after regularization");
  }
  linalg::Matrix out = a;
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] -= q.data[k];
  return out;
}

inline linalg::Matrix Transpose(const linalg::Matrix& m) {
  linalg::Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

inline const SimilarityKernel& Require(
    const std::optional<SimilarityKernel>& k, std::size_t expected,
    const char* what) {
  if (expected == 0) {
    static const SimilarityKernel kEmpty;
    return kEmpty;
  }
  if (!k) {
    throw std::invalid_argument(std::string(what) +
                                " kernel is required by log-determinant "
                                "information measures");
  }
  return *k;
}

inline linalg::Matrix RegularizedOrEmpty(const SimilarityKernel& k,
                                         std::size_t expected, double reg) {
  if (expected == 0) return linalg::Matrix(0, 0);
  return RegularizedSquare(k, reg);
}

}  // namespace detail

struct LogDetPairMemo {
  CholeskyMemo plus;
  CholeskyMemo minus;
};

// log det(X_A) - log det(Y_A); Y may be absent (treated as contributing 0).
class LogDetDifference final : public StatefulFunction<LogDetPairMemo> {
 public:
  LogDetDifference(std::size_t n, linalg::Matrix plus,
                   std::optional<linalg::Matrix> minus, std::string name,
                   bool monotone)
      : StatefulFunction(n),
        plus_(std::move(plus)),
        name_(std::move(name)),
        monotone_(monotone) {
    if (minus) minus_ = LogDetCore(std::move(*minus));
  }

  std::string Name() const override { return name_; }
  // Left at the default (submodular) so the lazy optimizers accept these
  // forms. The MI and CMI differences can break diminishing returns by small
  // amounts (~1e-4 on random instances); lazy results may then differ from
  // naive ones.
  bool IsMonotone() const override { return monotone_; }
  double Tolerance() const override { return 1e-6; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double v = plus_.Evaluate(x);
    if (minus_) v -= minus_->Evaluate(x);
    return v;
  }
  LogDetPairMemo Initial() const override {
    return {plus_.Initial(), minus_ ? minus_->Initial() : CholeskyMemo{}};
  }
  double Gain(const LogDetPairMemo& m, const MemoState&,
              Index e) const override {
    double g = plus_.Gain(m.plus, e);
    if (minus_) g -= minus_->Gain(m.minus, e);
    return g;
  }
  void Update(LogDetPairMemo& m, const MemoState& s, Index e) const override {
    plus_.Update(m.plus, s, e);
    if (minus_) minus_->Update(m.minus, s, e);
  }
  double Value(const LogDetPairMemo& m, const MemoState&) const override {
    return m.plus.value - (minus_ ? m.minus.value : 0.0);
  }

 private:
  LogDetCore plus_;
  std::optional<LogDetCore> minus_;
  std::string name_;
  bool monotone_;
};

inline std::unique_ptr<LogDetDifference> MakeLogDetMutualInformation(
    const SimilarityKernel& kernel, const QueryContext& q,
    double reg = kDefaultLogDetRegularization) {
  const std::size_t n = kernel.size();
  q.Validate(n);
  linalg::Matrix m = RegularizedMatrix(kernel, reg);
  const auto& qq = detail::Require(q.query_query_kernel, q.num_queries(), "query-query");
  linalg::Matrix conditioned = detail::SchurComplement(
      m, detail::RegularizedOrEmpty(qq, q.num_queries(), reg),
      detail::Transpose(detail::ToMatrix(q.query_kernel, q.eta)), "query-query");
  return std::make_unique<LogDetDifference>(n, std::move(m),
                                            std::move(conditioned),
                                            "LogDeterminantMutualInformation",
                                            true);
}

inline std::unique_ptr<LogDetDifference> MakeLogDetConditionalGain(
    const SimilarityKernel& kernel, const PrivateContext& p,
    double reg = kDefaultLogDetRegularization) {
  const std::size_t n = kernel.size();
  p.Validate(n);
  const auto& pp = detail::Require(p.private_private_kernel, p.num_private(),
                                   "private-private");
  linalg::Matrix conditioned = detail::SchurComplement(
      RegularizedMatrix(kernel, reg),
      detail::RegularizedOrEmpty(pp, p.num_private(), reg),
      detail::Transpose(detail::ToMatrix(p.private_kernel, p.nu)),
      "private-private");
  return std::make_unique<LogDetDifference>(n, std::move(conditioned),
                                            std::nullopt,
                                            "LogDeterminantConditionalGain",
                                            false);
}

// `query_private` is the |Q| x |P| cross kernel; it may be omitted when Q or
// P is empty. V-Q similarities are scaled by eta and V-P ones by nu.
inline std::unique_ptr<LogDetDifference> MakeLogDetConditionalMutualInformation(
    const SimilarityKernel& kernel, const QueryContext& q,
    const PrivateContext& p, const std::optional<CrossKernel>& query_private,
    double reg = kDefaultLogDetRegularization) {
  const std::size_t n = kernel.size();
  q.Validate(n);
  p.Validate(n);
  const std::size_t nq = q.num_queries();
  const std::size_t np = p.num_private();
  if (nq > 0 && np > 0) {
    if (!query_private) {
      throw std::invalid_argument(
          "query-private cross kernel is required by log-determinant "
          "conditional mutual information");
    }
    if (query_private->rows() != nq || query_private->cols() != np) {
      throw std::invalid_argument("query-private cross kernel size mismatch");
    }
  }
  const auto& qq = detail::Require(q.query_query_kernel, nq, "query-query");
  const auto& pp = detail::Require(p.private_private_kernel, np, "private-private");

  // Joint regularized kernel over V u Q.
  const std::size_t m = n + nq;
  linalg::Matrix joint(m, m);
  linalg::Matrix base = RegularizedMatrix(kernel, reg);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) joint(i, j) = base(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < nq; ++k) {
      joint(i, n + k) = q.eta * q.query_kernel(i, k);
      joint(n + k, i) = joint(i, n + k);
    }
  }
  if (nq > 0) {
    linalg::Matrix qreg = detail::RegularizedSquare(qq, reg);
    for (std::size_t a = 0; a < nq; ++a)
      for (std::size_t b = 0; b < nq; ++b) joint(n + a, n + b) = qreg(a, b);
  }

  // Condition on P.
  linalg::Matrix cross_p(np, m);
  for (std::size_t k = 0; k < np; ++k) {
    for (std::size_t i = 0; i < n; ++i) cross_p(k, i) = p.nu * p.private_kernel(i, k);
    for (std::size_t a = 0; a < nq; ++a) cross_p(k, n + a) = (*query_private)(a, k);
  }
  linalg::Matrix cg = detail::SchurComplement(
      joint, detail::RegularizedOrEmpty(pp, np, reg), std::move(cross_p),
      "private-private");

  // MI with respect to Q on the conditioned kernel.
  linalg::Matrix vv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vv(i, j) = cg(i, j);
  linalg::Matrix qq_cond(nq, nq);
  linalg::Matrix qv(nq, n);
  for (std::size_t a = 0; a < nq; ++a) {
    for (std::size_t b = 0; b < nq; ++b) qq_cond(a, b) = cg(n + a, n + b);
    for (std::size_t i = 0; i < n; ++i) qv(a, i) = cg(n + a, i);
  }
  linalg::Matrix conditioned =
      detail::SchurComplement(vv, qq_cond, std::move(qv), "conditioned query");
  return std::make_unique<LogDetDifference>(
      n, std::move(vv), std::move(conditioned),
      "LogDeterminantConditionalMutualInformation", false);
}

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_LOG_DET_INFO_HPP_
