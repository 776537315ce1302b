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
// Set-function contract
//
// Every function in the library is a SetFunction over the ground set
// {0, ..., n-1}. Two evaluation paths exist: the direct one (Evaluate,
// MarginalGain) that recomputes from the defining formula, and the memoized
// one (MakeMemo / GainWithMemo / UpdateMemo / EvalWithMemo) that keeps a
// function-specific statistic of the current subset so greedy optimizers can
// compute gains incrementally.

#ifndef SUBMODLIB_CORE_HPP_
#define SUBMODLIB_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace submodlib {

using Index = std::size_t;

// Sorted, duplicate-free set of ground-set indices. Range checking against a
// particular ground set happens when the subset is handed to a function.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<Index> members)
      : Subset(std::vector<Index>(members)) {}
  explicit Subset(std::vector<Index> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) !=
        members_.end()) {
      throw std::invalid_argument("Subset: duplicate element " +
                                  std::to_string(*std::adjacent_find(
                                      members_.begin(), members_.end())));
    }
  }

  // All indices 0..n-1.
  static Subset Range(std::size_t n) {
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i) all[i] = i;
    return Subset(std::move(all));
  }

  // Decodes a bitmask (bit i set <=> i in the subset).
  static Subset FromMask(unsigned long long mask) {
    std::vector<Index> members;
    for (Index i = 0; mask != 0; ++i, mask >>= 1) {
      if (mask & 1ULL) members.push_back(i);
    }
    return Subset(std::move(members));
  }

  bool Contains(Index e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Index>& members() const { return members_; }
  Index max() const { return members_.back(); }

  Subset With(Index e) const {
    if (Contains(e)) return *this;
    std::vector<Index> out = members_;
    out.insert(std::upper_bound(out.begin(), out.end(), e), e);
    Subset s;
    s.members_ = std::move(out);
    return s;
  }

  Subset Union(const Subset& other) const {
    Subset s;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(s.members_));
    return s;
  }

  Subset Minus(const Subset& other) const {
    Subset s;
    std::set_difference(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(s.members_));
    return s;
  }

  bool IsSubsetOf(const Subset& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<Index> members_;
};

class SetFunction;

// Type-erased holder for a function's pre-computed statistic.
struct MemoStatistic {
  virtual ~MemoStatistic() = default;
};

// Memoized summary of one subset A, created by SetFunction::MakeMemo and
// advanced by SetFunction::UpdateMemo. Bound to the function that created it
// and owned by a single selection run, so it is move-only.
class MemoState {
 public:
  MemoState(MemoState&&) noexcept = default;
  MemoState& operator=(MemoState&&) noexcept = default;
  MemoState(const MemoState&) = delete;
  MemoState& operator=(const MemoState&) = delete;

  // Elements of A in insertion order.
  const std::vector<Index>& order() const { return order_; }
  bool Contains(Index e) const { return member_[e] != 0; }
  std::size_t size() const { return order_.size(); }
  Subset AsSubset() const { return Subset(order_); }
  const SetFunction* owner() const { return owner_; }

 private:
  friend class SetFunction;
  MemoState(const SetFunction* owner, std::size_t n,
            std::unique_ptr<MemoStatistic> stat)
      : owner_(owner), member_(n, 0), stat_(std::move(stat)) {}

  const SetFunction* owner_;
  std::vector<Index> order_;
  std::vector<char> member_;
  std::unique_ptr<MemoStatistic> stat_;
};

class SetFunction {
 public:
  explicit SetFunction(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("ground set must be non-empty");
  }
  virtual ~SetFunction() = default;
  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  std::size_t size() const { return n_; }

  virtual std::string Name() const = 0;
  virtual bool IsSubmodular() const { return true; }
  virtual bool IsMonotone() const { return true; }
  // Equality tolerance between the memoized and direct paths.
  virtual double Tolerance() const { return 1e-9; }

  double Evaluate(const Subset& x) const {
    CheckRange(x);
    if (x.empty()) return 0.0;
    return DoEvaluate(x);
  }

  double MarginalGain(const Subset& x, Index e) const {
    CheckRange(x);
    CheckIndex(e);
    if (x.Contains(e)) {
      throw std::invalid_argument("MarginalGain: element " +
                                  std::to_string(e) + " already in subset");
    }
    return DoMarginalGain(x, e);
  }

  MemoState MakeMemo() const { return MemoState(this, n_, NewStatistic()); }

  double GainWithMemo(const MemoState& memo, Index e) const {
    CheckOwner(memo);
    CheckIndex(e);
    if (memo.Contains(e)) {
      throw std::invalid_argument("GainWithMemo: element " +
                                  std::to_string(e) + " already in subset");
    }
    return DoGain(*memo.stat_, memo, e);
  }

  void UpdateMemo(MemoState& memo, Index e) const {
    CheckOwner(memo);
    CheckIndex(e);
    if (memo.Contains(e)) {
      throw std::invalid_argument("UpdateMemo: element " + std::to_string(e) +
                                  " already in subset");
    }
    DoUpdate(*memo.stat_, memo, e);
    memo.order_.push_back(e);
    memo.member_[e] = 1;
  }

  double EvalWithMemo(const MemoState& memo) const {
    CheckOwner(memo);
    if (memo.order_.empty()) return 0.0;
    return DoValue(*memo.stat_, memo);
  }

  // Builds a memo for x by successive updates.
  MemoState MemoFor(const Subset& x) const {
    CheckRange(x);
    MemoState memo = MakeMemo();
    for (Index e : x) UpdateMemo(memo, e);
    return memo;
  }

 protected:
  virtual double DoEvaluate(const Subset& x) const = 0;
  virtual double DoMarginalGain(const Subset& x, Index e) const {
    return DoEvaluate(x.With(e)) - (x.empty() ? 0.0 : DoEvaluate(x));
  }

  virtual std::unique_ptr<MemoStatistic> NewStatistic() const = 0;
  // `memo` describes A before the update; it is never mutated here.
  virtual double DoGain(const MemoStatistic& stat, const MemoState& memo,
                        Index e) const = 0;
  virtual void DoUpdate(MemoStatistic& stat, const MemoState& memo,
                        Index e) const = 0;
  virtual double DoValue(const MemoStatistic& stat,
                         const MemoState& memo) const = 0;

  void CheckIndex(Index e) const {
    if (e >= n_) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside ground set of size " +
                              std::to_string(n_));
    }
  }
  void CheckRange(const Subset& x) const {
    if (!x.empty()) CheckIndex(x.max());
  }

 private:
  void CheckOwner(const MemoState& memo) const {
    if (memo.owner_ != this) {
      throw std::logic_error("stale memo: state belongs to another function");
    }
  }

  std::size_t n_;
};

// Adapter that lets a function define its statistic as a plain value type.
template <typename Stat>
class StatefulFunction : public SetFunction {
 public:
  using SetFunction::SetFunction;

 protected:
  virtual Stat Initial() const = 0;
  virtual double Gain(const Stat& stat, const MemoState& memo,
                      Index e) const = 0;
  virtual void Update(Stat& stat, const MemoState& memo, Index e) const = 0;
  virtual double Value(const Stat& stat, const MemoState& memo) const = 0;

 private:
  struct Holder final : MemoStatistic {
    explicit Holder(Stat s) : stat(std::move(s)) {}
    Stat stat;
  };

  std::unique_ptr<MemoStatistic> NewStatistic() const final {
    return std::make_unique<Holder>(Initial());
  }
  double DoGain(const MemoStatistic& stat, const MemoState& memo,
                Index e) const final {
    return Gain(static_cast<const Holder&>(stat).stat, memo, e);
  }
  void DoUpdate(MemoStatistic& stat, const MemoState& memo,
                Index e) const final {
    Update(static_cast<Holder&>(stat).stat, memo, e);
  }
  double DoValue(const MemoStatistic& stat,
                 const MemoState& memo) const final {
    return Value(static_cast<const Holder&>(stat).stat, memo);
  }
};

}  // namespace submodlib

#endif  // SUBMODLIB_CORE_HPP_
