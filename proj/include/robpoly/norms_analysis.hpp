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

#ifndef ROBPOLY_NORMS_ANALYSIS_HPP
#define ROBPOLY_NORMS_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "robpoly/polynomial.hpp"

namespace robpoly {

struct SandwichReport {
  std::string descriptor;
  int d = 0;
  int n = 0;
  double sup_norm = 0.0;
  double l1_norm = 0.0;
  double ratio = 0.0;         // sup / l1
  double bound = 0.0;         // (2d)^(2n), d taken as max(d, 1)
  double implied_constant = 0.0;  // smallest C with ratio <= C^n d^(2n)
  bool pass = false;          // ratio <= bound * (1 + 1e-6)
};

double SandwichBound(int d, int n);
SandwichReport CheckSandwich(const MultiPoly& p, std::string descriptor = {});

struct TightnessCase {
  MultiPoly f{1, 0};
  int d = 0;
  int n = 0;
  double analytic_ratio = 0.0;  // ((m+1)(m+2)/2)^n, d = 2m+1
};

// f(x) = ((x+1)/2) P'_{m+1}(x)^2 and its n-fold tensor product.
UniPoly TightnessFactor(int d);
TightnessCase TightnessFamily(int d, int n);

struct MeasureEstimate {
  double threshold = 0.0;
  double measure = 0.0;    // Lebesgue, so the whole cube is 2^n
  double std_error = 0.0;
  std::size_t samples = 0;
};

MeasureEstimate SuperLevelMeasure(const MultiPoly& p, double threshold,
                                  std::size_t samples, std::uint64_t seed);
// Measure of {x : |p(x)| >= |p(y)| / 2^n}.
MeasureEstimate LargeValueRegion(const MultiPoly& p, std::span<const double> y,
                                 std::size_t samples = 100000,
                                 std::uint64_t seed = 1);
double LargeValueLowerBound(int d, int n);  // (2d^2)^-n

struct WindowVerdict {
  double x_star = 0.0;
  double g_star = 0.0;
  double lo = -1.0;
  double hi = 1.0;
  double window_min = 0.0;
  bool holds = false;
};
WindowVerdict CheckUnivariateWindow(const UniPoly& g, int grid = 20001);

// sup |T_d'| / sup |T_d| on [-1, 1].
double MarkovRatio(int d);

struct GradientReport {
  double max_gradient = 0.0;  // max Euclidean norm of grad p on the grid
  double sup_norm = 0.0;
  double bound = 0.0;         // 2 d^2 ||p||
  bool pass = false;
};
GradientReport CheckGradientBound(const MultiPoly& p, int per_axis = 0);

// |integral of P_k f| over [-1, 1], by Gauss-Legendre.
double LegendreOrthogonalityResidual(const UniPoly& f, int k);

std::string SandwichCsv(std::span<const SandwichReport> rows);

}  // namespace robpoly

#endif  // ROBPOLY_NORMS_ANALYSIS_HPP
