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

#ifndef SUBMODLIB_FUNCTIONS_FEATURE_BASED_HPP_
#define SUBMODLIB_FUNCTIONS_FEATURE_BASED_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submodlib/core.hpp"

namespace submodlib {

// Concave g with g(0) = 0: sqrt(t), log(1 + t), t / (1 + t).
enum class Concave { kSqrt, kLog1p, kInverse };

inline double ApplyConcave(Concave g, double t) {
  switch (g) {
    case Concave::kSqrt:
      return std::sqrt(t);
    case Concave::kLog1p:
      return std::log1p(t);
    case Concave::kInverse:
      return t / (1.0 + t);
  }
  return 0.0;
}

inline Concave ParseConcave(const std::string& name) {
  if (name == "sqrt") return Concave::kSqrt;
  if (name == "log" || name == "log1p") return Concave::kLog1p;
  if (name == "inverse") return Concave::kInverse;
  throw std::invalid_argument("unknown concave function '" + name + "'");
}

inline std::string ConcaveName(Concave g) {
  switch (g) {
    case Concave::kSqrt:
      return "sqrt";
    case Concave::kLog1p:
      return "log1p";
    case Concave::kInverse:
      return "inverse";
  }
  return "?";
}

// Sparse nonnegative scores m_f(x) per element plus feature weights w_f.
struct FeatureTable {
  std::size_t num_features = 0;
  std::vector<double> weights;
  std::vector<std::vector<std::pair<std::size_t, double>>> scores;
  Concave concave = Concave::kSqrt;

  void Validate() const {
    if (weights.size() != num_features) {
      throw std::invalid_argument("feature table: " +
                                  std::to_string(weights.size()) +
                                  " weights for " +
                                  std::to_string(num_features) + " features");
    }
    for (double w : weights) {
      if (!std::isfinite(w) || w < 0.0)
        throw std::invalid_argument("feature table: weights must be finite and >= 0");
    }
    for (std::size_t x = 0; x < scores.size(); ++x) {
      for (auto [f, m] : scores[x]) {
        if (f >= num_features)
          throw std::invalid_argument("feature table: element " +
                                      std::to_string(x) + " names feature " +
                                      std::to_string(f));
        if (!std::isfinite(m) || m < 0.0)
          throw std::invalid_argument("feature table: element " +
                                      std::to_string(x) +
                                      " has a negative or non-finite score");
      }
    }
  }

  // Dense nonnegative matrix (rows = elements, cols = features), unit weights.
  static FeatureTable FromDense(std::size_t rows, std::size_t cols,
                                const std::vector<double>& values,
                                Concave concave) {
    FeatureTable t;
    t.num_features = cols;
    t.weights.assign(cols, 1.0);
    t.scores.resize(rows);
    t.concave = concave;
    for (std::size_t x = 0; x < rows; ++x)
      for (std::size_t f = 0; f < cols; ++f)
        if (values[x * cols + f] != 0.0)
          t.scores[x].emplace_back(f, values[x * cols + f]);
    return t;
  }
};

// f(X) = sum_f w_f g(m_f(X)), m_f(X) = sum_{x in X} m_f(x).
// Memo: [m_f(A), f in F].
class FeatureBased final : public StatefulFunction<std::vector<double>> {
 public:
  explicit FeatureBased(FeatureTable table)
      : StatefulFunction(table.scores.size()), table_(std::move(table)) {
    table_.Validate();
  }

  std::string Name() const override { return "FeatureBased"; }

 protected:
  double DoEvaluate(const Subset& x) const override {
    std::vector<double> mass(table_.num_features, 0.0);
    for (Index e : x)
      for (auto [f, m] : table_.scores[e]) mass[f] += m;
    return Total(mass);
  }

  std::vector<double> Initial() const override {
    return std::vector<double>(table_.num_features, 0.0);
  }
  double Gain(const std::vector<double>& mass, const MemoState&,
              Index e) const override {
    double gain = 0.0;
    for (auto [f, m] : table_.scores[e]) {
      gain += table_.weights[f] * (ApplyConcave(table_.concave, mass[f] + m) -
                                   ApplyConcave(table_.concave, mass[f]));
    }
    return gain;
  }
  void Update(std::vector<double>& mass, const MemoState&,
              Index e) const override {
    for (auto [f, m] : table_.scores[e]) mass[f] += m;
  }
  double Value(const std::vector<double>& mass,
               const MemoState&) const override {
    return Total(mass);
  }

 private:
  double Total(const std::vector<double>& mass) const {
    double total = 0.0;
    for (std::size_t f = 0; f < table_.num_features; ++f)
      total += table_.weights[f] * ApplyConcave(table_.concave, mass[f]);
    return total;
  }

  FeatureTable table_;
};

}  // namespace submodlib

#endif  // SUBMODLIB_FUNCTIONS_FEATURE_BASED_HPP_
