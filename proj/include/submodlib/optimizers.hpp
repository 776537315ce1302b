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
// Cardinality-constrained greedy maximization.
//
// All four optimizers drive the memoization contract and break ties toward
// the smallest element index, so lazy and naive greedy agree exactly on
// submodular functions. Every call to GainWithMemo is counted.

#ifndef SUBMODLIB_OPTIMIZERS_HPP_
#define SUBMODLIB_OPTIMIZERS_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "submodlib/core.hpp"

namespace submodlib {

enum class Optimizer { kNaive, kLazy, kStochastic, kLazier };

inline const char* OptimizerName(Optimizer o) {
  switch (o) {
    case Optimizer::kNaive: return "NaiveGreedy";
    case Optimizer::kLazy: return "LazyGreedy";
    case Optimizer::kStochastic: return "StochasticGreedy";
    case Optimizer::kLazier: return "LazierThanLazyGreedy";
  }
  return "?";
}

inline Optimizer ParseOptimizer(const std::string& s) {
  if (s == "naive" || s == "NaiveGreedy") return Optimizer::kNaive;
  if (s == "lazy" || s == "LazyGreedy") return Optimizer::kLazy;
  if (s == "stochastic" || s == "StochasticGreedy") return Optimizer::kStochastic;
  if (s == "lazier" || s == "LazierThanLazyGreedy") return Optimizer::kLazier;
  throw std::invalid_argument("unknown optimizer '" + s +
                              "' (expected naive, lazy, stochastic or lazier)");
}

inline bool IsSampling(Optimizer o) {
  return o == Optimizer::kStochastic || o == Optimizer::kLazier;
}

struct OptimizeSpec {
  std::size_t budget = 0;
  Optimizer optimizer = Optimizer::kNaive;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  bool stop_if_zero_gain = false;
  bool stop_if_negative_gain = false;

  void Validate(std::size_t n) const {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (budget > n) {
      throw std::invalid_argument("budget " + std::to_string(budget) +
                                  " exceeds ground set size " +
                                  std::to_string(n));
    }
    if (IsSampling(optimizer)) {
      if (!epsilon) {
        throw std::invalid_argument(std::string(OptimizerName(optimizer)) +
                                    " requires epsilon");
      }
      if (!(*epsilon > 0.0 && *epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
      }
    } else if (epsilon) {
      throw std::invalid_argument(std::string(OptimizerName(optimizer)) +
                                  " does not sample; epsilon must be unset");
    }
  }
};

struct Pick {
  Index index;
  double gain;
  friend bool operator==(const Pick&, const Pick&) = default;
};

struct GreedyResult {
  std::vector<Pick> picks;
  std::size_t evaluations = 0;   // GainWithMemo calls
  std::size_t reinsertions = 0;  // lazy bounds pushed back after re-evaluation

  Subset AsSubset() const {
    std::vector<Index> idx;
    for (const Pick& p : picks) idx.push_back(p.index);
    return Subset(std::move(idx));
  }
  std::vector<Index> Order() const {
    std::vector<Index> idx;
    for (const Pick& p : picks) idx.push_back(p.index);
    return idx;
  }
  double TotalGain() const {
    double t = 0.0;
    for (const Pick& p : picks) t += p.gain;
    return t;
  }
};

// s = ceil((n / b) ln(1 / epsilon)), before capping at the remaining pool.
inline std::size_t StochasticSampleSize(std::size_t n, std::size_t budget,
                                        double epsilon) {
  const double s = std::ceil(static_cast<double>(n) /
                             static_cast<double>(budget) *
                             std::log(1.0 / epsilon));
  return s < 1.0 ? 1 : static_cast<std::size_t>(s);
}

namespace detail {

constexpr Index kNone = std::numeric_limits<Index>::max();

// True when the best available gain ends the run. A gain of -inf means no
// element can be added at all (e.g. a singular log-det pivot).
inline bool ShouldStop(const OptimizeSpec& spec, double best) {
  if (!(best > -std::numeric_limits<double>::infinity())) return true;
  if (spec.stop_if_zero_gain && best <= 0.0) return true;
  if (spec.stop_if_negative_gain && best < 0.0) return true;
  return false;
}

inline void RequireSubmodular(const SetFunction& f, Optimizer o) {
  if (!f.IsSubmodular()) {
    throw std::invalid_argument(
        std::string(OptimizerName(o)) + " will work only for functions that "
        "are guaranteed to be submodular; " + f.Name() + " is not");
  }
}

struct Bound {
  double value;
  Index index;
  std::size_t stamp;  // iteration in which `value` was computed
};

// Max-heap order: larger bound first, then smaller index.
struct BoundLess {
  bool operator()(const Bound& a, const Bound& b) const {
    if (a.value != b.value) return a.value < b.value;
    return a.index > b.index;
  }
};

using BoundHeap = std::priority_queue<Bound, std::vector<Bound>, BoundLess>;

// Pops until an element provably has the largest gain in the heap. Stale
// entries are re-evaluated; one that still beats the next entry is taken at
// once. Returns {kNone, -inf} on an empty heap.
inline Pick LazySearch(const SetFunction& f, const MemoState& memo,
                       BoundHeap& heap, std::size_t iteration,
                       GreedyResult& result,
                       std::vector<double>* bounds = nullptr,
                       std::vector<std::size_t>* stamps = nullptr) {
  const BoundLess less;
  while (!heap.empty()) {
    Bound top = heap.top();
    heap.pop();
    if (top.stamp == iteration) return {top.index, top.value};
    top.value = f.GainWithMemo(memo, top.index);
    top.stamp = iteration;
    ++result.evaluations;
    if (bounds) (*bounds)[top.index] = top.value;
    if (stamps) (*stamps)[top.index] = iteration;
    if (heap.empty() || !less(top, heap.top())) return {top.index, top.value};
    heap.push(top);
    ++result.reinsertions;
  }
  return {kNone, -std::numeric_limits<double>::infinity()};
}

// Partial Fisher-Yates: moves a uniform sample of size s to pool[0, s).
inline void DrawSample(std::vector<Index>& pool, std::size_t s,
                       std::mt19937_64& rng) {
  for (std::size_t i = 0; i < s; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
}

inline void RemoveFromPool(std::vector<Index>& pool, Index e) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == e) {
      pool[i] = pool.back();
      pool.pop_back();
      return;
    }
  }
}

}  // namespace detail

inline GreedyResult NaiveGreedy(const SetFunction& f, const OptimizeSpec& spec) {
  spec.Validate(f.size());
  GreedyResult result;
  MemoState memo = f.MakeMemo();
  for (std::size_t step = 0; step < spec.budget; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    Index arg = detail::kNone;
    for (Index e = 0; e < f.size(); ++e) {
      if (memo.Contains(e)) continue;
      const double g = f.GainWithMemo(memo, e);
      ++result.evaluations;
      if (g > best) {
        best = g;
        arg = e;
      }
    }
    if (arg == detail::kNone || detail::ShouldStop(spec, best)) break;
    f.UpdateMemo(memo, arg);
    result.picks.push_back({arg, best});
  }
  return result;
}

inline GreedyResult LazyGreedy(const SetFunction& f, const OptimizeSpec& spec) {
  spec.Validate(f.size());
  detail::RequireSubmodular(f, Optimizer::kLazy);
  GreedyResult result;
  MemoState memo = f.MakeMemo();
  detail::BoundHeap heap;
  for (Index e = 0; e < f.size(); ++e) {
    heap.push({f.GainWithMemo(memo, e), e, 0});
    ++result.evaluations;
  }
  for (std::size_t step = 0; step < spec.budget; ++step) {
    const Pick p = detail::LazySearch(f, memo, heap, step, result);
    if (p.index == detail::kNone || detail::ShouldStop(spec, p.gain)) break;
    f.UpdateMemo(memo, p.index);
    result.picks.push_back(p);
  }
  return result;
}

inline GreedyResult StochasticGreedy(const SetFunction& f,
                                     const OptimizeSpec& spec) {
  spec.Validate(f.size());
  GreedyResult result;
  MemoState memo = f.MakeMemo();
  std::mt19937_64 rng(spec.seed);
  std::vector<Index> pool(f.size());
  for (Index e = 0; e < f.size(); ++e) pool[e] = e;
  const std::size_t sample =
      StochasticSampleSize(f.size(), spec.budget, *spec.epsilon);
  for (std::size_t step = 0; step < spec.budget && !pool.empty(); ++step) {
    const std::size_t s = std::min(sample, pool.size());
    detail::DrawSample(pool, s, rng);
    double best = -std::numeric_limits<double>::infinity();
    Index arg = detail::kNone;
    for (std::size_t k = 0; k < s; ++k) {
      const Index e = pool[k];
      const double g = f.GainWithMemo(memo, e);
      ++result.evaluations;
      if (g > best || (g == best && e < arg)) {
        best = g;
        arg = e;
      }
    }
    if (arg == detail::kNone || detail::ShouldStop(spec, best)) break;
    f.UpdateMemo(memo, arg);
    detail::RemoveFromPool(pool, arg);
    result.picks.push_back({arg, best});
  }
  return result;
}

// Stochastic greedy whose per-sample search is lazy: upper bounds persist
// across iterations (initially +inf) and only stale sampled bounds that reach
// the top of the sample's heap are re-evaluated.
inline GreedyResult LazierThanLazyGreedy(const SetFunction& f,
                                         const OptimizeSpec& spec) {
  spec.Validate(f.size());
  detail::RequireSubmodular(f, Optimizer::kLazier);
  GreedyResult result;
  MemoState memo = f.MakeMemo();
  std::mt19937_64 rng(spec.seed);
  std::vector<Index> pool(f.size());
  for (Index e = 0; e < f.size(); ++e) pool[e] = e;
  // Iteration numbers start at 1 so stamp 0 marks "never evaluated".
  std::vector<double> bounds(f.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> stamps(f.size(), 0);
  const std::size_t sample =
      StochasticSampleSize(f.size(), spec.budget, *spec.epsilon);
  for (std::size_t step = 1; step <= spec.budget && !pool.empty(); ++step) {
    const std::size_t s = std::min(sample, pool.size());
    detail::DrawSample(pool, s, rng);
    detail::BoundHeap heap;
    for (std::size_t k = 0; k < s; ++k)
      heap.push({bounds[pool[k]], pool[k], stamps[pool[k]]});
    const Pick p =
        detail::LazySearch(f, memo, heap, step, result, &bounds, &stamps);
    if (p.index == detail::kNone || detail::ShouldStop(spec, p.gain)) break;
    f.UpdateMemo(memo, p.index);
    detail::RemoveFromPool(pool, p.index);
    result.picks.push_back(p);
  }
  return result;
}

inline GreedyResult Maximize(const SetFunction& f, const OptimizeSpec& spec) {
  switch (spec.optimizer) {
    case Optimizer::kNaive: return NaiveGreedy(f, spec);
    case Optimizer::kLazy: return LazyGreedy(f, spec);
    case Optimizer::kStochastic: return StochasticGreedy(f, spec);
    case Optimizer::kLazier: return LazierThanLazyGreedy(f, spec);
  }
  throw std::invalid_argument("unknown optimizer");
}

}  // namespace submodlib

#endif  // SUBMODLIB_OPTIMIZERS_HPP_
