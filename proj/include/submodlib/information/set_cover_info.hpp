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
// Coverage information measures, all reduced to a plain (probabilistic) set
// cover on a modified cover.
//
// Set cover, with Gamma(Q) and Gamma(P) given as concept sets:
//   SCMI(A)  = w(Gamma(A) cap Gamma(Q))            covers filtered to Gamma(Q)
//   SCCG(A)  = w(Gamma(A) \ Gamma(P))              covers with Gamma(P) removed
//   SCCMI(A) = w(Gamma(A) cap Gamma(Q) \ Gamma(P))
//
// Probabilistic set cover, with per-concept Pbar_u(Q) (probability that Q
// covers u) and P_u(P) (probability that P misses u):
//   PSCMI(A)  = sum_u w_u Pbar_u(A) Pbar_u(Q)
//   PSCCG(A)  = sum_u w_u Pbar_u(A) P_u(P)
//   PSCCMI(A) = sum_u w_u Pbar_u(A) Pbar_u(Q) P_u(P)
// i.e. PSC with the concept weights rescaled.

#ifndef SUBMODLIB_INFORMATION_SET_COVER_INFO_HPP_
#define SUBMODLIB_INFORMATION_SET_COVER_INFO_HPP_

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"
#include "submodlib/functions/set_cover.hpp"

namespace submodlib {

namespace detail {

inline std::vector<char> ConceptMask(std::size_t num_concepts,
                                     const std::vector<std::size_t>& concepts,
                                     const char* what) {
  std::vector<char> mask(num_concepts, 0);
  for (std::size_t u : concepts) {
    if (u >= num_concepts) {
      throw std::invalid_argument(std::string(what) + ": concept " +
                                  std::to_string(u) + " >= " +
                                  std::to_string(num_concepts));
    }
    mask[u] = 1;
  }
  return mask;
}

inline ConceptCover FilterCover(ConceptCover cover,
                                const std::vector<char>& keep) {
  for (auto& c : cover.covers) {
    c.erase(std::remove_if(c.begin(), c.end(),
                           [&](std::size_t u) { return !keep[u]; }),
            c.end());
  }
  return cover;
}

inline void CheckProbabilities(const std::vector<double>& v, std::size_t n,
                               const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n) + " per-concept values, got " +
                                std::to_string(v.size()));
  }
  for (double x : v) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::invalid_argument(std::string(what) +
                                  ": values must lie in [0, 1]");
    }
  }
}

}  // namespace detail

inline std::unique_ptr<SetCover> MakeSetCoverMutualInformation(
    ConceptCover cover, const std::vector<std::size_t>& query_concepts) {
  cover.Validate();
  auto keep = detail::ConceptMask(cover.num_concepts, query_concepts, "SCMI");
  return std::make_unique<SetCover>(detail::FilterCover(std::move(cover), keep),
                                    "SetCoverMutualInformation");
}

inline std::unique_ptr<SetCover> MakeSetCoverConditionalGain(
    ConceptCover cover, const std::vector<std::size_t>& private_concepts) {
  cover.Validate();
  auto keep = detail::ConceptMask(cover.num_concepts, private_concepts, "SCCG");
  for (char& k : keep) k = !k;
  return std::make_unique<SetCover>(detail::FilterCover(std::move(cover), keep),
                                    "SetCoverConditionalGain");
}

inline std::unique_ptr<SetCover> MakeSetCoverConditionalMutualInformation(
    ConceptCover cover, const std::vector<std::size_t>& query_concepts,
    const std::vector<std::size_t>& private_concepts) {
  cover.Validate();
  auto keep = detail::ConceptMask(cover.num_concepts, query_concepts, "SCCMI");
  auto drop = detail::ConceptMask(cover.num_concepts, private_concepts, "SCCMI");
  for (std::size_t u = 0; u < keep.size(); ++u) keep[u] = keep[u] && !drop[u];
  return std::make_unique<SetCover>(detail::FilterCover(std::move(cover), keep),
                                    "SetCoverConditionalMutualInformation");
}

// Pbar_u(Q) for a concept-level query: 1 on the listed concepts, else 0.
inline std::vector<double> CoveredIndicator(
    std::size_t num_concepts, const std::vector<std::size_t>& concepts) {
  auto mask = detail::ConceptMask(num_concepts, concepts, "query concepts");
  return std::vector<double>(mask.begin(), mask.end());
}

// P_u(P) for a concept-level private set: 0 on the listed concepts, else 1.
inline std::vector<double> MissedIndicator(
    std::size_t num_concepts, const std::vector<std::size_t>& concepts) {
  auto mask = detail::ConceptMask(num_concepts, concepts, "private concepts");
  std::vector<double> out(num_concepts);
  for (std::size_t u = 0; u < num_concepts; ++u) out[u] = mask[u] ? 0.0 : 1.0;
  return out;
}

// Pbar_u(Q) when Q is a set of elements with their own probabilistic cover.
inline std::vector<double> CoveredProbability(const ProbCover& cover,
                                              const std::vector<Index>& which) {
  std::vector<double> miss = cover.Uncovered(which);
  for (double& m : miss) m = 1.0 - m;
  return miss;
}

inline std::unique_ptr<ProbabilisticSetCover> MakeProbSetCoverMutualInformation(
    ProbCover cover, const std::vector<double>& query_covered) {
  cover.Validate();
  detail::CheckProbabilities(query_covered, cover.num_concepts, "PSCMI");
  for (std::size_t u = 0; u < cover.num_concepts; ++u)
    cover.weights[u] *= query_covered[u];
  return std::make_unique<ProbabilisticSetCover>(
      std::move(cover), "ProbabilisticSetCoverMutualInformation");
}

inline std::unique_ptr<ProbabilisticSetCover> MakeProbSetCoverConditionalGain(
    ProbCover cover, const std::vector<double>& private_missed) {
  cover.Validate();
  detail::CheckProbabilities(private_missed, cover.num_concepts, "PSCCG");
  for (std::size_t u = 0; u < cover.num_concepts; ++u)
    cover.weights[u] *= private_missed[u];
  return std::make_unique<ProbabilisticSetCover>(
      std::move(cover), "ProbabilisticSetCoverConditionalGain");
}

inline std::unique_ptr<ProbabilisticSetCover>
MakeProbSetCoverConditionalMutualInformation(
    ProbCover cover, const std::vector<double>& query_covered,
    const std::vector<double>& private_missed) {
  cover.Validate();
  detail::CheckProbabilities(query_covered, cover.num_concepts, "PSCCMI");
  detail::CheckProbabilities(private_missed, cover.num_concepts, "PSCCMI");
  for (std::size_t u = 0; u < cover.num_concepts; ++u)
    cover.weights[u] *= query_covered[u] * private_missed[u];
  return std::make_unique<ProbabilisticSetCover>(
      std::move(cover), "ProbabilisticSetCoverConditionalMutualInformation");
}

}  // namespace submodlib

#endif  // SUBMODLIB_INFORMATION_SET_COVER_INFO_HPP_
