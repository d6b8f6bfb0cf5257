// Copyright 2026 The robpoly Authors.
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

// Independent reference implementations used only by tests.

#ifndef ROBPOLY_TESTS_ORACLES_HPP
#define ROBPOLY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Monomial coefficients of T_k from T_k = 2x T_{k-1} - T_{k-2}.
inline std::vector<std::vector<double>> ChebyshevMonomialTable(int d) {
  std::vector<std::vector<double>> t(static_cast<std::size_t>(d) + 1,
                                     std::vector<double>(static_cast<std::size_t>(d) + 1, 0.0));
  t[0][0] = 1.0;
  if (d >= 1) t[1][1] = 1.0;
  for (int k = 2; k <= d; ++k) {
    for (int i = 0; i <= d; ++i) {
      double v = -t[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(i)];
      if (i >= 1) v += 2.0 * t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
      t[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = v;
    }
  }
  return t;
}

inline double Horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Evaluates a tensor-Chebyshev coefficient array (last axis fastest) by
// expanding to monomials and nested Horner, one axis at a time.
inline double EvalViaMonomials(const std::vector<double>& cheb, int n, int d,
                               const std::vector<double>& x) {
  const auto t = ChebyshevMonomialTable(d);
  const std::size_t base = static_cast<std::size_t>(d) + 1;
  // Convert each axis in turn: cheb index -> monomial index.
  std::vector<double> cur = cheb;
  std::size_t inner = cur.size();
  for (int axis = 0; axis < n; ++axis) {
    inner /= base;
    const std::size_t outer = cur.size() / (base * inner);
    std::vector<double> next(cur.size(), 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        for (std::size_t k = 0; k < base; ++k) {
          const double c = cur[(o * base + k) * inner + i];
          for (std::size_t p = 0; p < base; ++p) next[(o * base + p) * inner + i] += c * t[k][p];
        }
      }
    }
    cur = std::move(next);
  }
  // Nested Horner, innermost axis last.
  std::vector<double> vals = cur;
  for (int axis = n - 1; axis >= 0; --axis) {
    std::vector<double> reduced(vals.size() / base);
    for (std::size_t o = 0; o < reduced.size(); ++o) {
      std::vector<double> c(vals.begin() + static_cast<std::ptrdiff_t>(o * base),
                            vals.begin() + static_cast<std::ptrdiff_t>((o + 1) * base));
      reduced[o] = Horner(c, x[static_cast<std::size_t>(axis)]);
    }
    vals = std::move(reduced);
  }
  return vals[0];
}

// Dense tensor grid maximum of |f|.
template <typename F>
double DenseGridMax(F&& f, int n, int per_axis) {
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> x(static_cast<std::size_t>(n));
  double best = 0.0;
  while (true) {
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = -1.0 + 2.0 * idx[static_cast<std::size_t>(i)] / (per_axis - 1);
    }
    best = std::max(best, std::abs(f(x)));
    int k = n - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == per_axis) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return best;
}

// Weighted median minimising sum w_i |c - y_i|; smallest minimiser.
inline double WeightedMedian(std::vector<std::pair<double, double>> yw) {
  std::sort(yw.begin(), yw.end());
  double total = 0.0;
  for (const auto& [y, w] : yw) total += w;
  double acc = 0.0;
  for (const auto& [y, w] : yw) {
    acc += w;
    if (acc >= total / 2.0) return y;
  }
  return yw.back().first;
}

// Dense tableau simplex for min c.x s.t. A x <= b, x >= 0, b >= 0.
// Bland's rule throughout. Returns nullopt when unbounded.
inline std::optional<double> TableauSimplex(const std::vector<std::vector<double>>& A,
                                            const std::vector<double>& b,
                                            const std::vector<double>& c) {
  const std::size_t m = A.size();
  const std::size_t nv = c.size();
  const std::size_t cols = nv + m + 1;
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) T[i][j] = A[i][j];
    T[i][nv + i] = 1.0;
    T[i][cols - 1] = b[i];
    basis[i] = nv + i;
  }
  for (std::size_t j = 0; j < nv; ++j) T[m][j] = c[j];
  for (int guard = 0; guard < 100000; ++guard) {
    std::size_t q = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (T[m][j] < -1e-12) {
        q = j;
        break;
      }
    }
    if (q == cols) return -T[m][cols - 1];
    std::size_t r = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][q] > 1e-12) {
        const double ratio = T[i][cols - 1] / T[i][q];
        if (ratio < best - 1e-15 || (ratio <= best + 1e-15 && r < m && basis[i] < basis[r])) {
          best = ratio;
          r = i;
        }
      }
    }
    if (r == m) return std::nullopt;
    const double piv = T[r][q];
    for (double& v : T[r]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || T[i][q] == 0.0) continue;
      const double f = T[i][q];
      for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[r][j];
    }
    basis[r] = q;
  }
  return std::nullopt;
}

// Solves the square system M z = v by Gaussian elimination with partial
// pivoting; nullopt when singular.
inline std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> M,
                                                      std::vector<double> v) {
  const std::size_t k = v.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < k; ++i) {
      if (std::abs(M[i][col]) > std::abs(M[piv][col])) piv = i;
    }
    if (std::abs(M[piv][col]) < 1e-12) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(v[piv], v[col]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col) continue;
      const double f = M[i][col] / M[col][col];
      for (std::size_t j = col; j < k; ++j) M[i][j] -= f * M[col][j];
      v[i] -= f * v[col];
    }
  }
  for (std::size_t i = 0; i < k; ++i) v[i] /= M[i][i];
  return v;
}

// Minimum of c.x over {A x <= b, x >= 0} by enumerating every vertex.
// Only for tiny problems; assumes the optimum is attained.
inline std::optional<double> VertexEnumeration(const std::vector<std::vector<double>>& A,
                                               const std::vector<double>& b,
                                               const std::vector<double>& c) {
  const std::size_t nv = c.size();
  // Rows: A x <= b, then -x_j <= 0.
  std::vector<std::vector<double>> G = A;
  std::vector<double> h = b;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<double> row(nv, 0.0);
    row[j] = -1.0;
    G.push_back(row);
    h.push_back(0.0);
  }
  const std::size_t rows = G.size();
  std::optional<double> best;
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(nv), true);
  do {
    std::vector<std::vector<double>> M;
    std::vector<double> v;
    for (std::size_t i = 0; i < rows; ++i) {
      if (pick[i]) {
        M.push_back(G[i]);
        v.push_back(h[i]);
      }
    }
    const auto x = SolveSquare(M, v);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < rows && feasible; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < nv; ++j) s += G[i][j] * (*x)[j];
      if (s > h[i] + 1e-9) feasible = false;
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (std::size_t j = 0; j < nv; ++j) obj += c[j] * (*x)[j];
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace oracle

#endif  // ROBPOLY_TESTS_ORACLES_HPP
