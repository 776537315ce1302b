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
// File formats.
//
// Feature matrices:
//   CSV     one point per line, comma-separated, no header.
//   binary  u64 LE n, u64 LE dims, then n*dims f64 LE values, row-major.
//           Files ending in .bin are read as binary, everything else as CSV.
// Precomputed dense kernels use the binary layout with n == dims.
//
// Concept JSON (set cover family):
//   {"num_concepts": m, "weights": [w_0, ...],
//    "covers": [[u, ...], ...]                      deterministic cover, or
//    "probs": [[[u, p], ...], ...]                  probabilistic cover,
//    "query_concepts": [u, ...], "private_concepts": [u, ...]}   optional

#ifndef SUBMODLIB_IO_HPP_
#define SUBMODLIB_IO_HPP_

#include <bit>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "submodlib/functions/set_cover.hpp"
#include "submodlib/kernel.hpp"

namespace submodlib::io {

// Input error naming the offending file and, when known, the 1-based row.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, std::size_t row, const std::string& msg)
      : std::runtime_error(path + (row ? ":" + std::to_string(row) : "") +
                           ": " + msg) {}
};

namespace detail {

inline std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline std::uint64_t ReadU64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return 0;
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

inline void WriteU64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

inline double ReadF64(std::istream& in) {
  return std::bit_cast<double>(ReadU64(in));
}

inline void WriteF64(std::ostream& out, double v) {
  WriteU64(out, std::bit_cast<std::uint64_t>(v));
}

}  // namespace detail

inline FeatureMatrix ReadFeatureCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, "cannot open file");
  std::vector<double> values;
  std::size_t dims = 0, rows = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::Trim(line).empty()) continue;
    std::size_t cols = 0;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const std::string t = detail::Trim(cell);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw InputError(path, line_no, "cannot parse '" + t + "' as a number");
      }
      if (!std::isfinite(v)) throw InputError(path, line_no, "non-finite value");
      values.push_back(v);
      ++cols;
    }
    if (rows == 0) {
      dims = cols;
    } else if (cols != dims) {
      throw InputError(path, line_no,
                       "expected " + std::to_string(dims) + " columns, got " +
                           std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw InputError(path, 0, "no data rows");
  return FeatureMatrix(rows, dims, std::move(values));
}

namespace detail {

inline std::vector<double> ReadBinaryMatrix(const std::string& path,
                                            std::uint64_t& n,
                                            std::uint64_t& dims) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot open file");
  n = ReadU64(in);
  dims = ReadU64(in);
  if (!in) throw InputError(path, 0, "truncated header");
  if (n == 0 || dims == 0) throw InputError(path, 0, "empty matrix in header");
  in.seekg(0, std::ios::end);
  const std::uint64_t size = static_cast<std::uint64_t>(in.tellg());
  if (size != 16 + 8 * n * dims) {
    throw InputError(path, 0,
                     "expected " + std::to_string(16 + 8 * n * dims) +
                         " bytes for " + std::to_string(n) + " x " +
                         std::to_string(dims) + ", file has " +
                         std::to_string(size));
  }
  in.seekg(16);
  std::vector<double> values(n * dims);
  for (std::uint64_t k = 0; k < n * dims; ++k) {
    values[k] = ReadF64(in);
    if (!std::isfinite(values[k]))
      throw InputError(path, k / dims + 1, "non-finite value");
  }
  return values;
}

}  // namespace detail

inline FeatureMatrix ReadFeatureBinary(const std::string& path) {
  std::uint64_t n = 0, dims = 0;
  auto values = detail::ReadBinaryMatrix(path, n, dims);
  return FeatureMatrix(n, dims, std::move(values));
}

inline void WriteFeatureBinary(const std::string& path,
                               const FeatureMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, 0, "cannot open for writing");
  detail::WriteU64(out, m.rows());
  detail::WriteU64(out, m.dims());
  for (double v : m.values()) detail::WriteF64(out, v);
}

inline void WriteFeatureCsv(const std::string& path, const FeatureMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InputError(path, 0, "cannot open for writing");
  out.precision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "," : "") << r[j];
    out << '\n';
  }
}

inline FeatureMatrix ReadFeatures(const std::string& path) {
  return detail::EndsWith(path, ".bin") ? ReadFeatureBinary(path)
                                        : ReadFeatureCsv(path);
}

inline SimilarityKernel ReadKernelBinary(const std::string& path) {
  std::uint64_t n = 0, dims = 0;
  auto values = detail::ReadBinaryMatrix(path, n, dims);
  if (n != dims) throw InputError(path, 0, "kernel must be square");
  try {
    return SimilarityKernel::Dense(n, std::move(values), "precomputed");
  } catch (const std::invalid_argument& e) {
    throw InputError(path, 0, e.what());
  }
}

struct Concepts {
  std::optional<ConceptCover> cover;
  std::optional<ProbCover> prob_cover;
  std::vector<std::size_t> query_concepts;
  std::vector<std::size_t> private_concepts;
  std::size_t num_elements = 0;
};

inline Concepts ReadConcepts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, "cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path, 0, std::string("invalid JSON: ") + e.what());
  }
  Concepts out;
  try {
    const std::size_t m = j.at("num_concepts").get<std::size_t>();
    std::vector<double> weights = j.contains("weights")
                                      ? j.at("weights").get<std::vector<double>>()
                                      : std::vector<double>(m, 1.0);
    if (j.contains("covers") == j.contains("probs")) {
      throw InputError(path, 0,
                       "exactly one of \"covers\" or \"probs\" is required");
    }
    if (j.contains("covers")) {
      ConceptCover c{m, weights,
                     j.at("covers").get<std::vector<std::vector<std::size_t>>>()};
      out.num_elements = c.covers.size();
      out.cover = std::move(c);
    } else {
      auto rows = j.at("probs")
                      .get<std::vector<std::vector<std::pair<std::size_t, double>>>>();
      ProbCover c;
      c.num_concepts = m;
      c.weights = weights;
      c.probs = std::move(rows);
      out.num_elements = c.probs.size();
      out.prob_cover = std::move(c);
    }
    if (j.contains("query_concepts"))
      out.query_concepts = j.at("query_concepts").get<std::vector<std::size_t>>();
    if (j.contains("private_concepts"))
      out.private_concepts =
          j.at("private_concepts").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path, 0, e.what());
  }
  try {
    if (out.cover) out.cover->Validate();
    if (out.prob_cover) out.prob_cover->Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(path, 0, e.what());
  }
  return out;
}

}  // namespace submodlib::io

#endif  // SUBMODLIB_IO_HPP_
