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
// Similarity kernels
//
// Supported metrics map a pair of feature vectors to a similarity in [0, 1]:
//   cosine:    s = max(0, <x, y> / (|x| |y|))
//   euclidean: s = 1 / (1 + |x - y|)
// Both give s_ii = 1. Disparity functions read distances as d = 1 - s.

#ifndef SUBMODLIB_KERNEL_HPP_
#define SUBMODLIB_KERNEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submodlib/core.hpp"

namespace submodlib {

// Row-major n x dims matrix of finite reals.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t dims, std::vector<double> values)
      : rows_(rows), dims_(dims), values_(std::move(values)) {
    if (rows_ == 0 || dims_ == 0) {
      throw std::invalid_argument("feature matrix must have rows and dims >= 1");
    }
    if (values_.size() != rows_ * dims_) {
      throw std::invalid_argument("feature matrix: expected " +
                                  std::to_string(rows_ * dims_) +
                                  " values, got " +
                                  std::to_string(values_.size()));
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!std::isfinite(values_[k])) {
        throw std::invalid_argument("feature matrix: non-finite value at row " +
                                    std::to_string(k / dims_));
      }
    }
  }

  static FeatureMatrix FromRows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("feature matrix: no rows");
    const std::size_t dims = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * dims);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != dims) {
        throw std::invalid_argument("feature matrix: row " + std::to_string(i) +
                                    " has " + std::to_string(rows[i].size()) +
                                    " columns, expected " +
                                    std::to_string(dims));
      }
      values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return FeatureMatrix(rows.size(), dims, std::move(values));
  }

  std::size_t rows() const { return rows_; }
  std::size_t dims() const { return dims_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dims_, dims_};
  }
  const std::vector<double>& values() const { return values_; }

  FeatureMatrix SelectRows(const std::vector<Index>& which) const {
    std::vector<double> out;
    out.reserve(which.size() * dims_);
    for (Index i : which) {
      auto r = row(i);
      out.insert(out.end(), r.begin(), r.end());
    }
    return FeatureMatrix(which.size(), dims_, std::move(out));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t dims_ = 0;
  std::vector<double> values_;
};

enum class Metric { kCosine, kEuclidean };

inline std::string MetricName(Metric m) {
  return m == Metric::kCosine ? "cosine" : "euclidean";
}

inline Metric ParseMetric(const std::string& name) {
  if (name == "cosine") return Metric::kCosine;
  if (name == "euclidean") return Metric::kEuclidean;
  throw std::invalid_argument("unknown metric '" + name + "'");
}

namespace detail {

inline double Norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline void CheckNonZeroRows(const FeatureMatrix& data, const char* what) {
  for (std::size_t i = 0; i < data.rows(); ++i) {
    if (Norm(data.row(i)) == 0.0) {
      throw std::invalid_argument(std::string(what) + ": row " +
                                  std::to_string(i) +
                                  " has zero norm under cosine metric");
    }
  }
}

}  // namespace detail

// Similarity of two feature vectors under `metric`.
inline double Similarity(std::span<const double> x, std::span<const double> y,
                         Metric metric) {
  if (metric == Metric::kCosine) {
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      dot += x[k] * y[k];
      nx += x[k] * x[k];
      ny += y[k] * y[k];
    }
    double c = dot / (std::sqrt(nx) * std::sqrt(ny));
    return std::clamp(c, 0.0, 1.0);
  }
  double d2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    double diff = x[k] - y[k];
    d2 += diff * diff;
  }
  return 1.0 / (1.0 + std::sqrt(d2));
}

// Dense rectangular matrix of cross-similarities (rows: A side, cols: B side).
class CrossKernel {
 public:
  CrossKernel() = default;
  CrossKernel(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
      throw std::invalid_argument("cross kernel: size mismatch");
    }
    for (double v : values_) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw std::invalid_argument("cross kernel: entry outside [0, 1]");
      }
    }
  }

  static CrossKernel FromRows(const std::vector<std::vector<double>>& rows) {
    std::vector<double> values;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("cross kernel: ragged");
      values.insert(values.end(), r.begin(), r.end());
    }
    return CrossKernel(rows.size(), cols, std::move(values));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }

  CrossKernel Transposed() const {
    std::vector<double> t(values_.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = (*this)(i, j);
    return CrossKernel(cols_, rows_, std::move(t));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

struct Neighbor {
  Index index;
  double similarity;
};

// Square n x n similarity kernel, stored either densely or as symmetric
// k-nearest-neighbour lists. Entries absent from a sparse row are 0.
class SimilarityKernel {
 public:
  enum class Storage { kDense, kSparse };

  SimilarityKernel() = default;

  // Validates symmetry (1e-9) and range [0, 1].
  static SimilarityKernel Dense(std::size_t n, std::vector<double> values,
                                std::string tag = "precomputed") {
    if (n == 0) throw std::invalid_argument("kernel: n must be >= 1");
    if (values.size() != n * n) {
      throw std::invalid_argument("kernel: expected " + std::to_string(n * n) +
                                  " entries, got " +
                                  std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double v = values[i * n + j];
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
          throw std::invalid_argument("kernel: entry (" + std::to_string(i) +
                                      ", " + std::to_string(j) +
                                      ") outside [0, 1]");
        }
        if (std::abs(v - values[j * n + i]) > 1e-9) {
          throw std::invalid_argument("kernel: not symmetric at (" +
                                      std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
        }
      }
    }
    SimilarityKernel k;
    k.n_ = n;
    k.storage_ = Storage::kDense;
    k.dense_ = std::move(values);
    k.tag_ = std::move(tag);
    return k;
  }

  static SimilarityKernel FromRows(const std::vector<std::vector<double>>& rows) {
    std::vector<double> values;
    for (const auto& r : rows) {
      if (r.size() != rows.size())
        throw std::invalid_argument("kernel: matrix must be square");
      values.insert(values.end(), r.begin(), r.end());
    }
    return Dense(rows.size(), std::move(values));
  }

  // Rows must already be symmetric under union; each row sorted by index.
  static SimilarityKernel Sparse(std::vector<std::vector<Neighbor>> rows,
                                 std::size_t k, std::string tag) {
    SimilarityKernel out;
    out.n_ = rows.size();
    out.storage_ = Storage::kSparse;
    out.sparse_ = std::move(rows);
    out.k_ = k;
    out.tag_ = std::move(tag);
    return out;
  }

  std::size_t size() const { return n_; }
  Storage storage() const { return storage_; }
  bool IsDense() const { return storage_ == Storage::kDense; }
  std::size_t k_neighbors() const { return k_; }
  const std::string& tag() const { return tag_; }

  double operator()(Index i, Index j) const {
    if (IsDense()) return dense_[i * n_ + j];
    const auto& r = sparse_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), j,
        [](const Neighbor& nb, Index idx) { return nb.index < idx; });
    return (it != r.end() && it->index == j) ? it->similarity : 0.0;
  }

  // Dense storage only.
  std::span<const double> row(Index i) const {
    return {dense_.data() + i * n_, n_};
  }
  // Sparse storage only; sorted by index.
  const std::vector<Neighbor>& neighbors(Index i) const { return sparse_[i]; }

  // Dense principal submatrix on `which` (in the given order).
  SimilarityKernel Submatrix(const std::vector<Index>& which) const {
    std::vector<double> out;
    out.reserve(which.size() * which.size());
    for (Index i : which)
      for (Index j : which) out.push_back((*this)(i, j));
    return Dense(which.size(), std::move(out), tag_ + "/sub");
  }

  // Columns `cols` of the kernel as an n x |cols| cross kernel.
  CrossKernel Columns(const std::vector<Index>& cols) const {
    std::vector<double> out;
    out.reserve(n_ * cols.size());
    for (Index i = 0; i < n_; ++i)
      for (Index j : cols) out.push_back((*this)(i, j));
    return CrossKernel(n_, cols.size(), std::move(out));
  }

  std::vector<double> ToDenseValues() const {
    if (IsDense()) return dense_;
    std::vector<double> out(n_ * n_, 0.0);
    for (Index i = 0; i < n_; ++i)
      for (const Neighbor& nb : sparse_[i]) out[i * n_ + nb.index] = nb.similarity;
    return out;
  }

 private:
  std::size_t n_ = 0;
  Storage storage_ = Storage::kDense;
  std::vector<double> dense_;
  std::vector<std::vector<Neighbor>> sparse_;
  std::size_t k_ = 0;
  std::string tag_;
};

inline SimilarityKernel BuildDenseKernel(const FeatureMatrix& data,
                                         Metric metric) {
  if (metric == Metric::kCosine) detail::CheckNonZeroRows(data, "dense kernel");
  const std::size_t n = data.rows();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = Similarity(data.row(i), data.row(j), metric);
      values[i * n + j] = s;
      values[j * n + i] = s;
    }
  }
  return SimilarityKernel::Dense(n, std::move(values),
                                 "dense/" + MetricName(metric));
}

// Keeps, per row, the self entry and the k most similar other rows (ties to
// the smaller index), then symmetrizes by union.
inline SimilarityKernel BuildSparseKernel(const FeatureMatrix& data,
                                          Metric metric,
                                          std::size_t k_neighbors) {
  const std::size_t n = data.rows();
  if (k_neighbors < 1 || k_neighbors >= n) {
    throw std::invalid_argument("sparse kernel: k_neighbors must be in [1, " +
                                std::to_string(n - 1) + "], got " +
                                std::to_string(k_neighbors));
  }
  if (metric == Metric::kCosine) detail::CheckNonZeroRows(data, "sparse kernel");

  std::vector<std::vector<Neighbor>> rows(n);
  std::vector<Neighbor> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    candidates.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      candidates.push_back({j, Similarity(data.row(i), data.row(j), metric)});
    }
    auto better = [](const Neighbor& a, const Neighbor& b) {
      if (a.similarity != b.similarity) return a.similarity > b.similarity;
      return a.index < b.index;
    };
    std::partial_sort(candidates.begin(), candidates.begin() + k_neighbors,
                      candidates.end(), better);
    rows[i].push_back({i, 1.0});
    rows[i].insert(rows[i].end(), candidates.begin(),
                   candidates.begin() + k_neighbors);
  }
  // Symmetrize.
  std::vector<std::vector<Neighbor>> sym = rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Neighbor& nb : rows[i]) {
      if (nb.index != i) sym[nb.index].push_back({i, nb.similarity});
    }
  }
  for (auto& r : sym) {
    std::sort(r.begin(), r.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.index < b.index;
    });
    r.erase(std::unique(r.begin(), r.end(),
                        [](const Neighbor& a, const Neighbor& b) {
                          return a.index == b.index;
                        }),
            r.end());
  }
  return SimilarityKernel::Sparse(std::move(sym), k_neighbors,
                                  "sparse/" + MetricName(metric) + "/k=" +
                                      std::to_string(k_neighbors));
}

inline CrossKernel BuildCrossKernel(const FeatureMatrix& a,
                                    const FeatureMatrix& b, Metric metric) {
  if (a.dims() != b.dims()) {
    throw std::invalid_argument("cross kernel: dimensionality mismatch (" +
                                std::to_string(a.dims()) + " vs " +
                                std::to_string(b.dims()) + ")");
  }
  if (metric == Metric::kCosine) {
    detail::CheckNonZeroRows(a, "cross kernel (A side)");
    detail::CheckNonZeroRows(b, "cross kernel (B side)");
  }
  std::vector<double> values(a.rows() * b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      values[i * b.rows() + j] = Similarity(a.row(i), b.row(j), metric);
  return CrossKernel(a.rows(), b.rows(), std::move(values));
}

}  // namespace submodlib

#endif  // SUBMODLIB_KERNEL_HPP_
