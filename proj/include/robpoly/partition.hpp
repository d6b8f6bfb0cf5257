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

#ifndef ROBPOLY_PARTITION_HPP
#define ROBPOLY_PARTITION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace robpoly {

enum class Distribution { kUniform, kChebyshev };

// Multi-index of a cell; every component lies in [1, m]. Component 1 is the
// cell touching +1 on that axis, component m the one touching -1.
using CellIndex = std::vector<int>;

// Closed axis-aligned box [lo_i, hi_i] per axis.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  bool Contains(std::span<const double> x, double tol = 0.0) const;
  bool ContainsBox(const Box& other, double tol = 0.0) const;
  std::vector<double> Center() const;
  double Volume() const;
};

// The (m, n) Chebyshev grid over [-1,1]^n: per-axis breakpoints are the
// extrema cos(pi k / m) of T_m. Cells are half-open; a breakpoint belongs to
// the cell on its larger-coordinate side, and x_i = 1 belongs to component 1.
class ChebPartition {
 public:
  ChebPartition(int m, int n);

  int m() const { return m_; }
  int dim() const { return n_; }
  std::size_t num_cells() const { return num_cells_; }

  // Ascending breakpoints, edges()[0] == -1 and edges()[m] == 1.
  std::span<const double> edges() const { return edges_; }

  // Interval of axis component j: [cos(pi j / m), cos(pi (j-1) / m)].
  double lower(int j) const;
  double upper(int j) const;
  double width(int j) const { return upper(j) - lower(j); }
  double min_width() const;

  // Per-axis component owning coordinate t (t must be in [-1, 1]).
  int AxisCell(double t) const;
  CellIndex CellOf(std::span<const double> x) const;
  std::size_t FlatCellOf(std::span<const double> x) const;

  std::size_t Flatten(const CellIndex& j) const;
  CellIndex Unflatten(std::size_t flat) const;

  Box CellBox(const CellIndex& j) const;
  std::vector<double> CellCenter(const CellIndex& j) const;

  // Uniform: product of widths / 2^n. Chebyshev: m^-n.
  double CellProbability(const CellIndex& j, Distribution dist) const;

  // Cell shrunk by `band` on every face. Throws naming the first cell whose
  // width does not exceed 2*band.
  Box InteriorRegion(const CellIndex& j, double band) const;

  ChebPartition Refine3() const { return ChebPartition(3 * m_, n_); }
  // (3 j_1 - 1, ..., 3 j_n - 1) in the refined grid.
  static CellIndex MiddleSubcell(const CellIndex& j);

  // Distance from t to the nearest breakpoint (including +-1).
  double DistanceToNearestEdge(double t) const;

 private:
  void CheckIndex(const CellIndex& j) const;

  int m_;
  int n_;
  std::size_t num_cells_;
  std::vector<double> edges_;
};

struct CellGoodness {
  std::size_t total = 0;
  std::size_t outliers = 0;
  double OutlierFraction() const {
    return total == 0 ? 0.0 : static_cast<double>(outliers) / static_cast<double>(total);
  }
};

struct GoodnessReport {
  std::vector<CellGoodness> cells;  // indexed by flat cell index
  std::size_t empty_cells = 0;
  double worst_fraction = 0.0;
  bool alpha_good = false;
};

// A sample set is alpha-good when every nonempty cell has outlier fraction
// strictly below alpha; strict mode also rejects empty cells.
GoodnessReport AlphaGoodness(const ChebPartition& part,
                             std::span<const double> points,
                             const std::vector<bool>& is_outlier, double alpha,
                             bool strict = false);

/// Outlier fraction threshold (2 rho + 1) / 4 used with outlier rate rho.
inline double AlphaForRho(double rho) { return (2.0 * rho + 1.0) / 4.0; }

}  // namespace robpoly

#endif  // ROBPOLY_PARTITION_HPP
