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

// Minimal dense linear algebra for the log-determinant family.

#ifndef SUBMODLIB_LINALG_HPP_
#define SUBMODLIB_LINALG_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace submodlib::linalg {

// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

class NotPositiveDefinite : public std::domain_error {
 public:
  NotPositiveDefinite(std::size_t pivot, double value)
      : std::domain_error("matrix not positive definite at pivot " +
                          std::to_string(pivot) + " (value " +
                          std::to_string(value) + ")"),
        pivot_(pivot) {}
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t pivot_;
};

// Lower-triangular L with A = L L^T. Throws NotPositiveDefinite.
inline Matrix Cholesky(const Matrix& a) {
  const std::size_t n = a.rows;
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw NotPositiveDefinite(j, d);
    const double root = std::sqrt(d);
    l(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / root;
    }
  }
  return l;
}

inline double LogDetFromCholesky(const Matrix& l) {
  double s = 0.0;
  for (std::size_t i = 0; i < l.rows; ++i) s += 2.0 * std::log(l(i, i));
  return s;
}

inline double LogDetSpd(const Matrix& a) {
  if (a.rows == 0) return 0.0;
  return LogDetFromCholesky(Cholesky(a));
}

// Solves L Y = B in place (B has L.rows rows).
inline void ForwardSubstitute(const Matrix& l, Matrix& b) {
  for (std::size_t c = 0; c < b.cols; ++c) {
    for (std::size_t i = 0; i < l.rows; ++i) {
      double s = b(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b(k, c);
      b(i, c) = s / l(i, i);
    }
  }
}

// Returns B^T A^{-1} B for SPD A, through Y = L^{-1} B: the result is Y^T Y.
inline Matrix QuadraticFormInverse(const Matrix& a, Matrix b) {
  Matrix l = Cholesky(a);
  ForwardSubstitute(l, b);
  Matrix out(b.cols, b.cols);
  for (std::size_t i = 0; i < b.cols; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < b.rows; ++k) s += b(k, i) * b(k, j);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return out;
}

}  // namespace submodlib::linalg

#endif  // SUBMODLIB_LINALG_HPP_
