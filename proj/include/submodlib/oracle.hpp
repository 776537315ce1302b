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
// Reference implementations for testing.
//
// Everything in submodlib::oracle is a straight transcription of a defining
// formula over plain nested vectors. Nothing here calls into the production
// kernels, memo code or factorizations; determinants use a separate LU
// elimination with partial pivoting.

#ifndef SUBMODLIB_ORACLE_HPP_
#define SUBMODLIB_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submodlib/core.hpp"

namespace submodlib::oracle {

using Dense = std::vector<std::vector<double>>;
using Elements = std::vector<Index>;

// ---------------------------------------------------------------------------
// Exhaustive optimum.

struct ExhaustiveResult {
  Subset best_subset;
  double best_value = -std::numeric_limits<double>::infinity();
  // Filled only for n <= 20.
  std::map<std::vector<Index>, double> all_values;
};

inline double Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * double(n - k + i) / double(i);
  return c;
}

inline constexpr double kMaxEnumeration = 2e6;

// Exact max of f over all subsets of size <= budget, by direct evaluation.
// Ties keep the first subset in (size, lexicographic) order.
inline ExhaustiveResult BruteForceOpt(const SetFunction& f,
                                      std::size_t budget) {
  const std::size_t n = f.size();
  if (budget > n) throw std::invalid_argument("budget exceeds ground set");
  double total = 0.0;
  for (std::size_t k = 0; k <= budget; ++k) total += Binomial(n, k);
  if (total > kMaxEnumeration) {
    throw std::invalid_argument("brute force: " + std::to_string(total) +
                                " subsets exceed the enumeration limit");
  }
  ExhaustiveResult out;
  const bool record = n <= 20;
  for (std::size_t k = 0; k <= budget; ++k) {
    std::vector<Index> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      Subset s(comb);
      const double v = f.Evaluate(s);
      if (record) out.all_values[comb] = v;
      if (v > out.best_value) {
        out.best_value = v;
        out.best_subset = s;
      }
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense linear algebra, independent of the production factorization.

inline double LogDetLu(Dense a) {
  const std::size_t n = a.size();
  double log_det = 0.0;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return -std::numeric_limits<double>::infinity();
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    if (a[c][c] < 0.0) sign = -sign;
    log_det += std::log(std::fabs(a[c][c]));
    for (std::size_t r = c + 1; r < n; ++r) {
      const double m = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
    }
  }
  if (sign < 0) throw std::domain_error("oracle: negative determinant");
  return log_det;
}

// Gauss-Jordan inverse.
inline Dense Inverse(Dense a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0.0) throw std::domain_error("oracle: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const double d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double m = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= m * a[c][k];
        inv[r][k] -= m * inv[c][k];
      }
    }
  }
  return inv;
}

inline Dense Multiply(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Dense c(a.size(), std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense Transposed(const Dense& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  Dense t(cols, std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

// M[rows, cols].
inline Dense Block(const Dense& m, const Elements& rows, const Elements& cols) {
  Dense b(rows.size(), std::vector<double>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b[i][j] = m[rows[i]][cols[j]];
  return b;
}

inline Dense AddDiagonal(Dense m, double v) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += v;
  return m;
}

inline Elements Union(Elements a, const Elements& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// ---------------------------------------------------------------------------
// Set functions.

inline double FacilityLocation(const Dense& s, const Elements& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double best = 0.0;
    for (Index j : x) best = std::max(best, s[i][j]);
    total += best;
  }
  return total;
}

// `u_by_v` is |U| x n.
inline double FacilityLocationRepresented(const Dense& u_by_v,
                                          const Elements& x) {
  return FacilityLocation(u_by_v, x);
}

// sum_l FL restricted to cluster l, with `cluster[i]` the cluster of i.
inline double ClusteredFacilityLocation(const Dense& s,
                                        const std::vector<std::size_t>& cluster,
                                        const Elements& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double best = 0.0;
    for (Index j : x)
      if (cluster[j] == cluster[i]) best = std::max(best, s[i][j]);
    total += best;
  }
  return total;
}

inline double GraphCut(const Dense& s, double lambda, const Elements& x) {
  double cover = 0.0, penalty = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (Index j : x) cover += s[i][j];
  for (Index i : x)
    for (Index j : x) penalty += s[i][j];
  return cover - lambda * penalty;
}

inline double LogDeterminant(const Dense& s, double reg, const Elements& x) {
  if (x.empty()) return 0.0;
  return LogDetLu(AddDiagonal(Block(s, x, x), reg));
}

inline double DisparityMin(const Dense& s, const Elements& x) {
  if (x.size() <= 1) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      best = std::min(best, 1.0 - s[x[a]][x[b]]);
  return best;
}

inline double DisparitySum(const Dense& s, const Elements& x) {
  double total = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) total += 1.0 - s[x[a]][x[b]];
  return total;
}

// covers[e] lists concepts covered by e.
inline double SetCover(const std::vector<double>& weights,
                       const std::vector<std::vector<std::size_t>>& covers,
                       const Elements& x) {
  std::vector<bool> hit(weights.size(), false);
  for (Index e : x)
    for (std::size_t u : covers[e]) hit[u] = true;
  double total = 0.0;
  for (std::size_t u = 0; u < weights.size(); ++u)
    if (hit[u]) total += weights[u];
  return total;
}

// probs[e][u] = probability that e covers u.
inline double ProbabilisticSetCover(const std::vector<double>& weights,
                                    const Dense& probs, const Elements& x) {
  double total = 0.0;
  for (std::size_t u = 0; u < weights.size(); ++u) {
    double miss = 1.0;
    for (Index e : x) miss *= 1.0 - probs[e][u];
    total += weights[u] * (1.0 - miss);
  }
  return total;
}

inline double Concave(const std::string& psi, double t) {
  if (psi == "sqrt") return std::sqrt(t);
  if (psi == "log") return std::log(1.0 + t);
  if (psi == "inverse") return t / (1.0 + t);
  throw std::invalid_argument("oracle: unknown concave " + psi);
}

// scores[e][k] = m_k(e).
inline double FeatureBased(const std::vector<double>& weights,
                           const Dense& scores, const std::string& psi,
                           const Elements& x) {
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    double m = 0.0;
    for (Index e : x) m += scores[e][k];
    total += weights[k] * Concave(psi, m);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Generic compositions over an arbitrary set function.

using Fn = std::function<double(const Elements&)>;

inline double MutualInformation(const Fn& f, const Elements& a,
                                const Elements& q) {
  return f(a) + f(q) - f(Union(a, q));
}

inline double ConditionalGain(const Fn& f, const Elements& a,
                              const Elements& p) {
  return f(Union(a, p)) - f(p);
}

inline double ConditionalMutualInformation(const Fn& f, const Elements& a,
                                           const Elements& q,
                                           const Elements& p) {
  return f(Union(a, p)) + f(Union(q, p)) - f(Union(Union(a, q), p)) - f(p);
}

// ---------------------------------------------------------------------------
// Closed forms. `vq` is n x |Q| and `vp` is n x |P|.

namespace detail {
inline double RowMax(const std::vector<double>& row) {
  double m = 0.0;
  for (double v : row) m = std::max(m, v);
  return m;
}
}  // namespace detail

inline double FlVmi(const Dense& s, const Dense& vq, double eta,
                    const Elements& a) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double best = 0.0;
    for (Index j : a) best = std::max(best, s[i][j]);
    total += std::min(best, eta * detail::RowMax(vq[i]));
  }
  return total;
}

inline double FlQmi(const Dense& vq, double eta, const Elements& a) {
  const std::size_t nq = vq.empty() ? 0 : vq[0].size();
  double total = 0.0;
  for (std::size_t j = 0; j < nq; ++j) {
    double best = 0.0;
    for (Index i : a) best = std::max(best, vq[i][j]);
    total += best;
  }
  for (Index i : a) total += eta * detail::RowMax(vq[i]);
  return total;
}

inline double FlCg(const Dense& s, const Dense& vp, double nu,
                   const Elements& a) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double best = 0.0;
    for (Index j : a) best = std::max(best, s[i][j]);
    total += std::max(best - nu * detail::RowMax(vp[i]), 0.0);
  }
  return total;
}

inline double FlCmi(const Dense& s, const Dense& vq, const Dense& vp,
                    double eta, double nu, const Elements& a) {
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    double best = 0.0;
    for (Index j : a) best = std::max(best, s[i][j]);
    total += std::max(std::min(best, eta * detail::RowMax(vq[i])) -
                          nu * detail::RowMax(vp[i]),
                      0.0);
  }
  return total;
}

inline double GcMi(const Dense& vq, double lambda, const Elements& a) {
  double total = 0.0;
  for (Index i : a)
    for (double v : vq[i]) total += v;
  return 2.0 * lambda * total;
}

inline double GcCg(const Dense& s, const Dense& vp, double lambda, double nu,
                   const Elements& a) {
  double cross = 0.0;
  for (Index i : a)
    for (double v : vp[i]) cross += v;
  return GraphCut(s, lambda, a) - 2.0 * lambda * nu * cross;
}

inline double Com(const Dense& vq, double eta, const std::string& psi,
                  const Elements& a) {
  const std::size_t nq = vq.empty() ? 0 : vq[0].size();
  double total = 0.0;
  for (Index i : a) {
    double row = 0.0;
    for (double v : vq[i]) row += v;
    total += eta * Concave(psi, row);
  }
  for (std::size_t j = 0; j < nq; ++j) {
    double col = 0.0;
    for (Index i : a) col += vq[i][j];
    total += Concave(psi, col);
  }
  return total;
}

// log det(S_A) - log det(S_A - eta^2 S_AQ S_Q^-1 S_AQ^T) on the regularized
// kernel; `qq` is |Q| x |Q|.
inline double LogDetMi(const Dense& s, const Dense& vq, const Dense& qq,
                       double eta, double reg, const Elements& a) {
  if (a.empty()) return 0.0;
  Dense sa = AddDiagonal(Block(s, a, a), reg);
  if (qq.empty()) return 0.0;
  Dense saq(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    saq[r] = vq[a[r]];
    for (double& v : saq[r]) v *= eta;
  }
  Dense corr =
      Multiply(Multiply(saq, Inverse(AddDiagonal(qq, reg))), Transposed(saq));
  Dense cond = sa;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) cond[i][j] -= corr[i][j];
  return LogDetLu(sa) - LogDetLu(cond);
}

inline double LogDetCg(const Dense& s, const Dense& vp, const Dense& pp,
                       double nu, double reg, const Elements& a) {
  if (a.empty()) return 0.0;
  Dense sa = AddDiagonal(Block(s, a, a), reg);
  if (pp.empty()) return LogDetLu(sa);
  Dense sap(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    sap[r] = vp[a[r]];
    for (double& v : sap[r]) v *= nu;
  }
  Dense corr =
      Multiply(Multiply(sap, Inverse(AddDiagonal(pp, reg))), Transposed(sap));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) sa[i][j] -= corr[i][j];
  return LogDetLu(sa);
}

// Ratio form at eta = nu = 1 with Q, P subsets of V, all blocks taken from
// the regularized kernel s + reg I:
//   log det(I - S_P^-1 S_PQ S_Q^-1 S_PQ^T)
//     - log det(I - S_AP^-1 S_AP,Q S_Q^-1 S_AP,Q^T)
// where AP = A u P.
inline double LogDetCmiRatio(const Dense& s, double reg, const Elements& a,
                             const Elements& q, const Elements& p) {
  const Dense m = AddDiagonal(s, reg);
  const Dense q_inv = Inverse(Block(m, q, q));
  auto term = [&](const Elements& x) {
    if (x.empty()) return 0.0;
    const Dense sxq = Block(m, x, q);
    Dense inner = Multiply(Multiply(Inverse(Block(m, x, x)), sxq),
                           Multiply(q_inv, Transposed(sxq)));
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = 0; j < inner.size(); ++j)
        inner[i][j] = (i == j ? 1.0 : 0.0) - inner[i][j];
    return LogDetLu(inner);
  };
  return term(p) - term(Union(a, p));
}

}  // namespace submodlib::oracle

#endif  // SUBMODLIB_ORACLE_HPP_
