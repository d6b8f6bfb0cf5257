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

#ifndef ROBPOLY_LP_HPP
#define ROBPOLY_LP_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "robpoly/polynomial.hpp"

namespace robpoly {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// minimize objective . x subject to the constraints and lower <= x <= upper.
// Empty bound vectors mean x >= 0. Use -kInf / kInf for free sides.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void Validate() const;
};

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNumericalFailure,
};

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  // One multiplier per constraint with objective - A^T duals >= 0 on
  // variables at their lower bound (minimisation convention).
  std::vector<double> duals;
  int iterations = 0;
  double max_violation = 0.0;
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  int max_iterations = 0;  // 0 = automatic
  int refactor_every = 50;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 30;
};

// Bounded-variable revised simplex (two phases, dense basis inverse with
// periodic refactorisation, row equilibration, Dantzig pricing with a
// Bland fallback on stalls). Suited to problems with at most a few hundred
// rows and any number of columns.
LpSolution Solve(const LinearProgram& lp, const LpOptions& options = {});

struct FitResult {
  MultiPoly poly;
  // Minimax fit: max |poly(x_j) - y_j|. Weighted L1 fit: the weighted sum.
  double objective = 0.0;
  int iterations = 0;
};

// Chebyshev-basis design row: T_a(x) for every multi-index a, flat order.
std::vector<double> DesignRow(std::span<const double> x, int n, int d);

// argmin_q max_j |q(x_j) - y_j| over individual degree d, solved through the
// LP dual (one column per residual sign), so the constraint count only
// affects the number of columns.
FitResult LinfFit(std::span<const double> points, int n,
                  std::span<const double> labels, int d);

struct WeightedCell {
  std::vector<double> points;  // flat, n per sample
  std::vector<double> labels;
  double weight = 1.0;         // multiplies every |residual| in the cell
};

// argmin_f sum_cells weight * sum_samples |f(x) - y|. Every cell must hold at
// least one sample.
FitResult WeightedL1Fit(std::span<const WeightedCell> cells, int n, int d);

}  // namespace robpoly

#endif  // ROBPOLY_LP_HPP
