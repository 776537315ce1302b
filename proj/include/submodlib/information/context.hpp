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

#ifndef SUBMODLIB_INFORMATION_CONTEXT_HPP_
#define SUBMODLIB_INFORMATION_CONTEXT_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

namespace detail {

inline void CheckScale(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace detail

// Query set Q: V x Q cross-similarities, optionally the Q x Q kernel (needed
// by the log-determinant forms), and the relevance trade-off eta.
struct QueryContext {
  CrossKernel query_kernel;
  std::optional<SimilarityKernel> query_query_kernel;
  double eta = 1.0;

  std::size_t num_queries() const { return query_kernel.cols(); }

  void Validate(std::size_t n) const {
    detail::CheckScale(eta, "eta");
    if (query_kernel.rows() != n) {
      throw std::invalid_argument("query kernel has " +
                                  std::to_string(query_kernel.rows()) +
                                  " rows, expected " + std::to_string(n));
    }
    if (query_query_kernel && query_query_kernel->size() != num_queries()) {
      throw std::invalid_argument("query-query kernel size mismatch");
    }
  }

  // Q given as members of the ground set of `kernel`.
  static QueryContext FromGroundSubset(const SimilarityKernel& kernel,
                                       const Subset& q, double eta) {
    QueryContext ctx;
    ctx.query_kernel = kernel.Columns(q.members());
    if (!q.empty()) ctx.query_query_kernel = kernel.Submatrix(q.members());
    ctx.eta = eta;
    return ctx;
  }

  static QueryContext FromFeatures(const FeatureMatrix& ground,
                                   const FeatureMatrix& queries, Metric metric,
                                   double eta) {
    QueryContext ctx;
    ctx.query_kernel = BuildCrossKernel(ground, queries, metric);
    ctx.query_query_kernel = BuildDenseKernel(queries, metric);
    ctx.eta = eta;
    return ctx;
  }
};

// Private set P: V x P cross-similarities, optionally the P x P kernel, and
// the privacy strictness nu.
struct PrivateContext {
  CrossKernel private_kernel;
  std::optional<SimilarityKernel> private_private_kernel;
  double nu = 1.0;

  std::size_t num_private() const { return private_kernel.cols(); }

  void Validate(std::size_t n) const {
    detail::CheckScale(nu, "nu");
    if (private_kernel.rows() != n) {
      throw std::invalid_argument("private kernel has " +
                                  std::to_string(private_kernel.rows()) +
                                  " rows, expected " + std::to_string(n));
    }
    if (private_private_kernel &&
        private_private_kernel->size() != num_private()) {
      throw std::invalid_argument("private-private kernel size mismatch");
    }
  }

  static PrivateContext FromGroundSubset(const SimilarityKernel& kernel,
                                         const Subset& p, double nu) {
    PrivateContext ctx;
    ctx.private_kernel = kernel.Columns(p.members());
    if (!p.empty()) ctx.private_private_kernel = kernel.Submatrix(p.members());
    ctx.nu = nu;
    return ctx;
  }

  static PrivateContext FromFeatures(const FeatureMatrix& ground,
                                     const FeatureMatrix& privates,
                                     Metric metric, double nu) {
    PrivateContext ctx;
    ctx.private_kernel = BuildCrossKernel(ground, privates, metric);
    ctx.private_private_kernel = BuildDenseKernel(privates, metric);
    ctx.nu = nu;
    return ctx;
  }
};

// Per-row maximum of a cross kernel, scaled; 0 for an empty column set.
inline std::vector<double> ScaledRowMax(const CrossKernel& k, double scale) {
  std::vector<double> out(k.rows(), 0.0);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    double best = 0.0;
    for (double s : k.row(i)) best = std::max(best, s);
    out[i] = scale * best;
  }
  return out;
}

inline std::vector<double> RowSum(const CrossKernel& k) {
  std::vector<double> out(k.rows(), 0.0);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (double s : k.row(i)) out[i] += s;
  return out;
}

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_CONTEXT_HPP_
