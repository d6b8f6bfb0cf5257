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

#ifndef ROBPOLY_REGRESSION_HPP
#define ROBPOLY_REGRESSION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robpoly/partition.hpp"
#include "robpoly/polynomial.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {

enum class Variant { kPlain, kWithL1, kFinitePrecision };

const char* ToString(Variant v);
Variant ParseVariant(const std::string& s);  // "plain", "l1", "fp"

struct RecoveryConfig {
  int d = -1;
  int n = -1;
  double eps = 0.5;
  double eta = 1e-2;
  double rho = 0.0;
  std::optional<int> m_override;
  double c_grid = 2.0;
  int max_iters = 200;
  Variant variant = Variant::kPlain;
  int precision_bits = 0;            // N, finite-precision variant only
  std::optional<double> sigma;       // checked against 2^-N when known
  double l1_cell_budget = 1e5;       // max cells for the l1 grid
  bool strict = false;               // empty refine cells become errors

  void Validate() const;
  // Internal accuracy parameter: eps/7 (plain, fp) or eps/10 (l1).
  double EpsInternal() const;
};

// Grid size for the plain recovery: ceil(c_grid * d * n / eps_int).
int PlainGridSize(const RecoveryConfig& cfg);
// Grid size demanded by the l1 variant: ceil((c_grid d)^(2n+1) / eps_int).
double L1GridSize(const RecoveryConfig& cfg);
// Chebyshev-sampling sample count (1-2rho)^-2 m^n log(m^n / delta).
std::size_t ChebyshevSampleCount(int m, int n, double rho, double delta);
// N = ceil(log_{1/eps}((5 + 2V) / eta)) + 1.
int PlainIterationCount(double eps_int, double v, double eta);
// ceil(2n log_{1/eps}(2 sqrt2 d) + log_{1/eps}(1 / (1 - 2 alpha))).
int L1IterationCount(double eps_int, int d, int n, double rho);

struct RefineResult {
  MultiPoly p_hat;
  std::vector<double> medians;  // per flat cell; NaN when empty
  std::size_t skipped = 0;
  int lp_iterations = 0;
};

// Cell membership of every sample, grouped for repeated median passes.
class CellGroups {
 public:
  CellGroups(const ChebPartition& part, const SampleSet& s);
  std::size_t num_cells() const { return offsets_.size() - 1; }
  std::size_t cell_of(std::size_t sample) const { return cell_of_[sample]; }
  std::span<const std::size_t> members(std::size_t cell) const {
    return std::span<const std::size_t>(order_).subspan(
        offsets_[cell], offsets_[cell + 1] - offsets_[cell]);
  }

 private:
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> order_;
};

RefineResult Refine(const SampleSet& s, const ChebPartition& part,
                    const MultiPoly& p_hat, bool strict = false);
RefineResult Refine(const SampleSet& s, const ChebPartition& part,
                    const CellGroups& groups, const MultiPoly& p_hat,
                    bool strict = false);

struct IterationInfo {
  int iteration = 0;  // 1-based refine count
  const MultiPoly* before = nullptr;
  const MultiPoly* after = nullptr;
  const ChebPartition* partition = nullptr;
  const CellGroups* groups = nullptr;
  const SampleSet* samples = nullptr;
  std::span<const double> medians;
};
using IterationObserver = std::function<void(const IterationInfo&)>;

struct FitReport {
  MultiPoly p_hat{1, 0};
  Variant variant = Variant::kPlain;
  int m = 0;
  int iterations = 0;
  int iteration_bound = 0;
  bool cap_hit = false;
  std::vector<double> errors;  // sup-norm vs truth, errors[0] before any refine
  std::size_t cells_skipped = 0;
  int lp_solves = 0;
  long long lp_iterations = 0;
  std::size_t samples_used = 0;
  std::size_t samples_dropped = 0;
  std::size_t unstable_survivors = 0;
  double seconds = 0.0;
  std::vector<std::string> warnings;
};

FitReport MedianRecover(const SampleSet& s, const RecoveryConfig& cfg,
                        const IterationObserver& observer = {});
FitReport MedianRecoverWithL1(const SampleSet& s, const RecoveryConfig& cfg,
                              const IterationObserver& observer = {});

struct SiftResult {
  SampleSet kept;
  std::size_t dropped = 0;
};
SiftResult SiftFinitePrecision(const SampleSet& s, const ChebPartition& part,
                               int bits);
FitReport FinitePrecisionRecover(const SampleSet& s, const RecoveryConfig& cfg,
                                 const IterationObserver& observer = {});

// Dispatches on cfg.variant.
FitReport Recover(const SampleSet& s, const RecoveryConfig& cfg,
                  const IterationObserver& observer = {});

// sup |p - r| where r is p's value at each cell center, taken cell-wise on
// a per_cell^n sub-grid that includes the cell corners.
double PiecewiseConstantError(const MultiPoly& p, const ChebPartition& part,
                              int per_cell = 9);

}  // namespace robpoly

#endif  // ROBPOLY_REGRESSION_HPP
