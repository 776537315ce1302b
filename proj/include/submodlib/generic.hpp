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
// Information measures built from any base function f on the same ground set:
//
//   conditional gain          f(A | P)     = f(A u P) - f(P)
//   mutual information        I_f(A; Q)    = f(A) + f(Q) - f(A u Q)
//   conditional mutual info   I_f(A; Q | P) = f(A u P) + f(Q u P)
//                                             - f(A u Q u P) - f(P)
//
// The memoized path runs the base function's own memo on the shifted sets
// (A, A u Q, A u P, A u Q u P), so any base gets incremental gains for free.

#ifndef SUBMODLIB_GENERIC_HPP_
#define SUBMODLIB_GENERIC_HPP_

#include <memory>
#include <string>
#include <utility>

#include "submodlib/core.hpp"

namespace submodlib {

namespace detail {

inline void CheckWithin(const SetFunction& f, const Subset& s,
                        const char* what) {
  if (!s.empty() && s.max() >= f.size()) {
    throw std::out_of_range(std::string(what) + ": element " +
                            std::to_string(s.max()) +
                            " outside ground set of size " +
                            std::to_string(f.size()));
  }
}

}  // namespace detail

class ConditionalGain final : public StatefulFunction<MemoState> {
 public:
  ConditionalGain(std::shared_ptr<const SetFunction> base, Subset p)
      : StatefulFunction(base->size()), base_(std::move(base)), p_(std::move(p)) {
    detail::CheckWithin(*base_, p_, "conditional gain");
    f_p_ = base_->Evaluate(p_);
  }

  std::string Name() const override { return "CG(" + base_->Name() + ")"; }
  bool IsSubmodular() const override { return base_->IsSubmodular(); }
  bool IsMonotone() const override { return base_->IsMonotone(); }
  double Tolerance() const override { return base_->Tolerance(); }

 protected:
  double DoEvaluate(const Subset& a) const override {
    return base_->Evaluate(a.Union(p_)) - f_p_;
  }
  MemoState Initial() const override { return base_->MemoFor(p_); }
  double Gain(const MemoState& ap, const MemoState&, Index e) const override {
    return ap.Contains(e) ? 0.0 : base_->GainWithMemo(ap, e);
  }
  void Update(MemoState& ap, const MemoState&, Index e) const override {
    if (!ap.Contains(e)) base_->UpdateMemo(ap, e);
  }
  double Value(const MemoState& ap, const MemoState&) const override {
    return base_->EvalWithMemo(ap) - f_p_;
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  Subset p_;
  double f_p_ = 0.0;
};

struct PairMemo {
  MemoState first;
  MemoState second;
};

class MutualInformation final : public StatefulFunction<PairMemo> {
 public:
  MutualInformation(std::shared_ptr<const SetFunction> base, Subset q)
      : StatefulFunction(base->size()), base_(std::move(base)), q_(std::move(q)) {
    detail::CheckWithin(*base_, q_, "mutual information");
    f_q_ = base_->Evaluate(q_);
  }

  std::string Name() const override { return "MI(" + base_->Name() + ")"; }
  bool IsSubmodular() const override { return base_->IsSubmodular(); }
  bool IsMonotone() const override { return base_->IsMonotone(); }
  double Tolerance() const override { return base_->Tolerance(); }

 protected:
  double DoEvaluate(const Subset& a) const override {
    return base_->Evaluate(a) + f_q_ - base_->Evaluate(a.Union(q_));
  }
  // first: A, second: A u Q.
  PairMemo Initial() const override {
    return {base_->MakeMemo(), base_->MemoFor(q_)};
  }
  double Gain(const PairMemo& m, const MemoState&, Index e) const override {
    const double joint = m.second.Contains(e) ? 0.0 : base_->GainWithMemo(m.second, e);
    return base_->GainWithMemo(m.first, e) - joint;
  }
  void Update(PairMemo& m, const MemoState&, Index e) const override {
    base_->UpdateMemo(m.first, e);
    if (!m.second.Contains(e)) base_->UpdateMemo(m.second, e);
  }
  double Value(const PairMemo& m, const MemoState&) const override {
    return base_->EvalWithMemo(m.first) + f_q_ - base_->EvalWithMemo(m.second);
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  Subset q_;
  double f_q_ = 0.0;
};

class ConditionalMutualInformation final : public StatefulFunction<PairMemo> {
 public:
  ConditionalMutualInformation(std::shared_ptr<const SetFunction> base,
                               Subset q, Subset p)
      : StatefulFunction(base->size()),
        base_(std::move(base)),
        q_(std::move(q)),
        p_(std::move(p)) {
    detail::CheckWithin(*base_, q_, "conditional mutual information");
    detail::CheckWithin(*base_, p_, "conditional mutual information");
    f_p_ = base_->Evaluate(p_);
    f_qp_ = base_->Evaluate(q_.Union(p_));
  }

  std::string Name() const override { return "CMI(" + base_->Name() + ")"; }
  bool IsSubmodular() const override { return base_->IsSubmodular(); }
  bool IsMonotone() const override { return base_->IsMonotone(); }
  double Tolerance() const override { return base_->Tolerance(); }

 protected:
  double DoEvaluate(const Subset& a) const override {
    const Subset ap = a.Union(p_);
    return base_->Evaluate(ap) + f_qp_ - base_->Evaluate(ap.Union(q_)) - f_p_;
  }
  // first: A u P, second: A u Q u P.
  PairMemo Initial() const override {
    return {base_->MemoFor(p_), base_->MemoFor(q_.Union(p_))};
  }
  double Gain(const PairMemo& m, const MemoState&, Index e) const override {
    const double g1 = m.first.Contains(e) ? 0.0 : base_->GainWithMemo(m.first, e);
    const double g2 = m.second.Contains(e) ? 0.0 : base_->GainWithMemo(m.second, e);
    return g1 - g2;
  }
  void Update(PairMemo& m, const MemoState&, Index e) const override {
    if (!m.first.Contains(e)) base_->UpdateMemo(m.first, e);
    if (!m.second.Contains(e)) base_->UpdateMemo(m.second, e);
  }
  double Value(const PairMemo& m, const MemoState&) const override {
    return base_->EvalWithMemo(m.first) + f_qp_ -
           base_->EvalWithMemo(m.second) - f_p_;
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  Subset q_;
  Subset p_;
  double f_p_ = 0.0;
  double f_qp_ = 0.0;
};

}  // namespace submodlib

#endif  // SUBMODLIB_GENERIC_HPP_
