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

#include "robpoly/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "robpoly/error.hpp"

namespace robpoly {

bool Box::Contains(std::span<const double> x, double tol) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
  }
  return true;
}

bool Box::ContainsBox(const Box& other, double tol) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (other.lo[i] < lo[i] - tol || other.hi[i] > hi[i] + tol) return false;
  }
  return true;
}

std::vector<double> Box::Center() const {
  std::vector<double> c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

double Box::Volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

ChebPartition::ChebPartition(int m, int n) : m_(m), n_(n) {
  Require(m >= 1, "ChebPartition: m must be at least 1");
  Require(n >= 1, "ChebPartition: n must be at least 1");
  num_cells_ = 1;
  for (int i = 0; i < n; ++i) num_cells_ *= static_cast<std::size_t>(m);
  edges_.resize(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m / 2; ++k) {
    const double v = std::cos(std::numbers::pi * (m - k) / m);
    edges_[static_cast<std::size_t>(k)] = v;
    edges_[static_cast<std::size_t>(m - k)] = -v;
  }
  edges_.front() = -1.0;
  edges_.back() = 1.0;
  if (m % 2 == 0) edges_[static_cast<std::size_t>(m / 2)] = 0.0;
}

double ChebPartition::lower(int j) const {
  return edges_[static_cast<std::size_t>(m_ - j)];
}

double ChebPartition::upper(int j) const {
  return edges_[static_cast<std::size_t>(m_ - j + 1)];
}

double ChebPartition::min_width() const {
  double w = 2.0;
  for (int j = 1; j <= m_; ++j) w = std::min(w, width(j));
  return w;
}

int ChebPartition::AxisCell(double t) const {
  Require(t >= -1.0 && t <= 1.0,
          "point coordinate " + std::to_string(t) + " outside [-1, 1]");
  // k with edges[k] <= t < edges[k+1]; t == 1 goes to the top interval.
  auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
  int k = static_cast<int>(it - edges_.begin()) - 1;
  k = std::clamp(k, 0, m_ - 1);
  return m_ - k;
}

CellIndex ChebPartition::CellOf(std::span<const double> x) const {
  Require(static_cast<int>(x.size()) == n_, "CellOf: wrong point dimension",
          ErrorCode::kDimensionMismatch);
  CellIndex j(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) j[static_cast<std::size_t>(i)] = AxisCell(x[static_cast<std::size_t>(i)]);
  return j;
}

std::size_t ChebPartition::FlatCellOf(std::span<const double> x) const {
  Require(static_cast<int>(x.size()) == n_, "FlatCellOf: wrong point dimension",
          ErrorCode::kDimensionMismatch);
  std::size_t flat = 0;
  for (int i = 0; i < n_; ++i) {
    flat = flat * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(AxisCell(x[static_cast<std::size_t>(i)]) - 1);
  }
  return flat;
}

void ChebPartition::CheckIndex(const CellIndex& j) const {
  Require(static_cast<int>(j.size()) == n_, "cell index has wrong arity",
          ErrorCode::kDimensionMismatch);
  for (int c : j) Require(c >= 1 && c <= m_, "cell index component out of [1, m]");
}

std::size_t ChebPartition::Flatten(const CellIndex& j) const {
  CheckIndex(j);
  std::size_t flat = 0;
  for (int c : j) flat = flat * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c - 1);
  return flat;
}

CellIndex ChebPartition::Unflatten(std::size_t flat) const {
  Require(flat < num_cells_, "flat cell index out of range");
  CellIndex j(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    j[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(m_)) + 1;
    flat /= static_cast<std::size_t>(m_);
  }
  return j;
}

Box ChebPartition::CellBox(const CellIndex& j) const {
  CheckIndex(j);
  Box b;
  for (int c : j) {
    b.lo.push_back(lower(c));
    b.hi.push_back(upper(c));
  }
  return b;
}

std::vector<double> ChebPartition::CellCenter(const CellIndex& j) const {
  return CellBox(j).Center();
}

double ChebPartition::CellProbability(const CellIndex& j, Distribution dist) const {
  CheckIndex(j);
  if (dist == Distribution::kChebyshev) {
    return 1.0 / static_cast<double>(num_cells_);
  }
  double p = 1.0;
  for (int c : j) p *= width(c) / 2.0;
  return p;
}

Box ChebPartition::InteriorRegion(const CellIndex& j, double band) const {
  Require(band >= 0.0, "InteriorRegion: band must be non-negative");
  for (int c = 1; c <= m_; ++c) {
    Require(2.0 * band < width(c),
            "InteriorRegion: band " + std::to_string(band) +
                " too large for axis cell " + std::to_string(c) + " of width " +
                std::to_string(width(c)));
  }
  Box b = CellBox(j);
  for (std::size_t i = 0; i < b.lo.size(); ++i) {
    b.lo[i] += band;
    b.hi[i] -= band;
  }
  return b;
}

CellIndex ChebPartition::MiddleSubcell(const CellIndex& j) {
  CellIndex k(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) k[i] = 3 * j[i] - 1;
  return k;
}

double ChebPartition::DistanceToNearestEdge(double t) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  double best = 2.0;
  if (it != edges_.end()) best = std::min(best, std::abs(*it - t));
  if (it != edges_.begin()) best = std::min(best, std::abs(*(it - 1) - t));
  return best;
}

GoodnessReport AlphaGoodness(const ChebPartition& part,
                             std::span<const double> points,
                             const std::vector<bool>& is_outlier, double alpha,
                             bool strict) {
  const std::size_t n = static_cast<std::size_t>(part.dim());
  Require(points.size() == is_outlier.size() * n,
          "AlphaGoodness: flags not aligned with samples",
          ErrorCode::kDimensionMismatch);
  GoodnessReport rep;
  rep.cells.resize(part.num_cells());
  for (std::size_t i = 0; i < is_outlier.size(); ++i) {
    auto& cell = rep.cells[part.FlatCellOf(points.subspan(i * n, n))];
    ++cell.total;
    if (is_outlier[i]) ++cell.outliers;
  }
  bool good = true;
  for (const auto& c : rep.cells) {
    if (c.total == 0) {
      ++rep.empty_cells;
      if (strict) good = false;
      continue;
    }
    rep.worst_fraction = std::max(rep.worst_fraction, c.OutlierFraction());
    if (!(c.OutlierFraction() < alpha)) good = false;
  }
  rep.alpha_good = good;
  return rep;
}

}  // namespace robpoly
