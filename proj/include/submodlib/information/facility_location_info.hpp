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
// Facility-location information measures.
//
// With a_i = max_{j in A} s_ij, q_i = eta * max_{j in Q} s_ij and
// p_i = nu * max_{j in P} s_ij:
//
//   FLVMI(A) = sum_{i in V} min(a_i, q_i)
//   FLCG(A)  = sum_{i in V} max(a_i - p_i, 0)
//   FLCMI(A) = sum_{i in V} max(min(a_i, q_i) - p_i, 0)
//
// All three are sum_i T_i(a_i) with T_i nondecreasing, so they share one
// implementation whose memo is [a_i, i in V].
//
//   FLQMI(A) = sum_{q in Q} max_{j in A} s_jq + eta * sum_{j in A} max_{q} s_jq
//
// needs only the V x Q cross kernel; its memo is [max_{j in A} s_jq, q in Q].

#ifndef SUBMODLIB_INFORMATION_FACILITY_LOCATION_INFO_HPP_
#define SUBMODLIB_INFORMATION_FACILITY_LOCATION_INFO_HPP_

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/information/context.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib {

class FacilityLocationInformation final
    : public StatefulFunction<std::vector<double>> {
 public:
  static std::unique_ptr<FacilityLocationInformation> MutualInformation(
      const SimilarityKernel& kernel, const QueryContext& q) {
    q.Validate(kernel.size());
    return std::unique_ptr<FacilityLocationInformation>(new FacilityLocationInformation(
        kernel, ScaledRowMax(q.query_kernel, q.eta), Zeros(kernel.size()),
        "FacilityLocationMutualInformation"));
  }

  static std::unique_ptr<FacilityLocationInformation> ConditionalGain(
      const SimilarityKernel& kernel, const PrivateContext& p) {
    p.Validate(kernel.size());
    return std::unique_ptr<FacilityLocationInformation>(new FacilityLocationInformation(
        kernel, Unbounded(kernel.size()), ScaledRowMax(p.private_kernel, p.nu),
        "FacilityLocationConditionalGain"));
  }

  static std::unique_ptr<FacilityLocationInformation> ConditionalMutualInformation(
      const SimilarityKernel& kernel, const QueryContext& q,
      const PrivateContext& p) {
    q.Validate(kernel.size());
    p.Validate(kernel.size());
    return std::unique_ptr<FacilityLocationInformation>(new FacilityLocationInformation(
        kernel, ScaledRowMax(q.query_kernel, q.eta),
        ScaledRowMax(p.private_kernel, p.nu),
        "FacilityLocationConditionalMutualInformation"));
  }

  std::string Name() const override { return name_; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double total = 0.0;
    for (Index i = 0; i < size(); ++i) {
      double best = 0.0;
      for (Index j : x) best = std::max(best, At(i, j));
      total += Term(i, best);
    }
    return total;
  }

  std::vector<double> Initial() const override { return Zeros(size()); }
  double Gain(const std::vector<double>& best, const MemoState&,
              Index e) const override {
    const double* r = &kernel_[e * size()];
    double gain = 0.0;
    for (Index i = 0; i < size(); ++i) {
      if (r[i] > best[i]) gain += Term(i, r[i]) - Term(i, best[i]);
    }
    return gain;
  }
  void Update(std::vector<double>& best, const MemoState&,
              Index e) const override {
    const double* r = &kernel_[e * size()];
    for (Index i = 0; i < size(); ++i) best[i] = std::max(best[i], r[i]);
  }
  double Value(const std::vector<double>& best,
               const MemoState&) const override {
    double total = 0.0;
    for (Index i = 0; i < size(); ++i) total += Term(i, best[i]);
    return total;
  }

 private:
  FacilityLocationInformation(const SimilarityKernel& kernel,
                              std::vector<double> cap,
                              std::vector<double> floor, std::string name)
      : StatefulFunction(kernel.size()),
        kernel_(kernel.ToDenseValues()),
        cap_(std::move(cap)),
        floor_(std::move(floor)),
        name_(std::move(name)) {}

  static std::vector<double> Zeros(std::size_t n) {
    return std::vector<double>(n, 0.0);
  }
  static std::vector<double> Unbounded(std::size_t n) {
    return std::vector<double>(n, std::numeric_limits<double>::infinity());
  }

  double Term(Index i, double a) const {
    return std::max(std::min(a, cap_[i]) - floor_[i], 0.0);
  }
  double At(Index i, Index j) const { return kernel_[i * size() + j]; }

  std::vector<double> kernel_;
  std::vector<double> cap_;
  std::vector<double> floor_;
  std::string name_;
};

class FacilityLocationVariantMutualInformation final
    : public StatefulFunction<std::vector<double>> {
 public:
  explicit FacilityLocationVariantMutualInformation(const QueryContext& q)
      : StatefulFunction(q.query_kernel.rows()),
        cross_(q.query_kernel),
        relevance_(ScaledRowMax(q.query_kernel, q.eta)) {
    detail::CheckScale(q.eta, "eta");
  }

  std::string Name() const override {
    return "FacilityLocationVariantMutualInformation";
  }

 protected:
  double DoEvaluate(const Subset& x) const override {
    double coverage = 0.0;
    for (std::size_t q = 0; q < cross_.cols(); ++q) {
      double best = 0.0;
      for (Index j : x) best = std::max(best, cross_(j, q));
      coverage += best;
    }
    double relevance = 0.0;
    for (Index j : x) relevance += relevance_[j];
    return coverage + relevance;
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(cross_.cols(), 0.0);
  }
  double Gain(const std::vector<double>& best, const MemoState&,
              Index e) const override {
    double gain = relevance_[e];
    auto r = cross_.row(e);
    for (std::size_t q = 0; q < r.size(); ++q)
      if (r[q] > best[q]) gain += r[q] - best[q];
    return gain;
  }
  void Update(std::vector<double>& best, const MemoState&,
              Index e) const override {
    auto r = cross_.row(e);
    for (std::size_t q = 0; q < r.size(); ++q) best[q] = std::max(best[q], r[q]);
  }
  double Value(const std::vector<double>& best,
               const MemoState& memo) const override {
    double total = 0.0;
    for (double b : best) total += b;
    for (Index j : memo.order()) total += relevance_[j];
    return total;
  }

 private:
  CrossKernel cross_;
  std::vector<double> relevance_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_FACILITY_LOCATION_INFO_HPP_
