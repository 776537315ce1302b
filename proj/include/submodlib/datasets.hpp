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

// Seeded synthetic datasets used by the benchmark and the acceptance suite.

#ifndef SUBMODLIB_DATASETS_HPP_
#define SUBMODLIB_DATASETS_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "submodlib/kernel.hpp"

namespace submodlib::datasets {

inline constexpr std::size_t kOutlier = std::numeric_limits<std::size_t>::max();

struct Labeled {
  FeatureMatrix data;
  std::vector<std::size_t> labels;  // cluster id, or kOutlier
  std::vector<std::vector<double>> centers;
};

// Isotropic Gaussian blobs: centers uniform in [-box, box]^dims, points split
// into contiguous equal-size groups (earlier groups take the remainder).
inline Labeled Blobs(std::size_t n, std::size_t centers, std::size_t dims,
                     double stddev, std::uint64_t seed, double box = 10.0) {
  if (n == 0 || centers == 0 || dims == 0 || centers > n) {
    throw std::invalid_argument("blobs: need n >= centers >= 1 and dims >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> where(-box, box);
  std::normal_distribution<double> noise(0.0, stddev);
  Labeled out;
  out.centers.assign(centers, std::vector<double>(dims));
  for (auto& c : out.centers)
    for (double& v : c) v = where(rng);
  std::vector<double> values;
  values.reserve(n * dims);
  for (std::size_t c = 0; c < centers; ++c) {
    const std::size_t count = n / centers + (c < n % centers ? 1 : 0);
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t d = 0; d < dims; ++d)
        values.push_back(out.centers[c][d] + noise(rng));
      out.labels.push_back(c);
    }
  }
  out.data = FeatureMatrix(n, dims, std::move(values));
  return out;
}

// The optimizer comparison dataset: 500 2-D points in 10 clusters, std 4.
inline Labeled OptimizerBenchmarkData(std::uint64_t seed) {
  return Blobs(500, 10, 2, 4.0, seed);
}

// 48 2-D points: four tight clusters of 11 (each an exact centre plus a
// jittered ring) followed by four far outliers at indices 44..47.
inline Labeled ClustersWithOutliers(std::uint64_t seed) {
  const std::vector<std::vector<double>> centers = {
      {-10.0, -10.0}, {10.0, -10.0}, {-10.0, 10.0}, {10.0, 10.0}};
  const std::vector<std::vector<double>> outliers = {
      {0.0, 45.0}, {45.0, 0.0}, {0.0, -45.0}, {-45.0, 0.0}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  constexpr double kPi = 3.14159265358979323846;
  Labeled out;
  out.centers = centers;
  std::vector<double> values;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    values.push_back(centers[c][0]);
    values.push_back(centers[c][1]);
    out.labels.push_back(c);
    for (int k = 0; k < 10; ++k) {
      const double angle = 2.0 * kPi * k / 10.0;
      const double r = 1.0 + jitter(rng);
      values.push_back(centers[c][0] + r * std::cos(angle));
      values.push_back(centers[c][1] + r * std::sin(angle));
      out.labels.push_back(c);
    }
  }
  for (const auto& o : outliers) {
    values.push_back(o[0]);
    values.push_back(o[1]);
    out.labels.push_back(kOutlier);
  }
  out.data = FeatureMatrix(out.labels.size(), 2, std::move(values));
  return out;
}

// Uniform [0, 1) points, e.g. the 1024-dimensional timing data.
inline FeatureMatrix UniformPoints(std::size_t n, std::size_t dims,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> values(n * dims);
  for (double& v : values) v = u(rng);
  return FeatureMatrix(n, dims, std::move(values));
}

// Index of the point nearest to each center (ties to the smaller index).
inline std::vector<Index> NearestToCenters(const Labeled& set) {
  std::vector<Index> out;
  for (const auto& c : set.centers) {
    Index best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < set.data.rows(); ++i) {
      auto r = set.data.row(i);
      double d = 0.0;
      for (std::size_t k = 0; k < r.size(); ++k) d += (r[k] - c[k]) * (r[k] - c[k]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace submodlib::datasets

#endif  // SUBMODLIB_DATASETS_HPP_
