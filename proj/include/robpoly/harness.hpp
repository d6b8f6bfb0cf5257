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

#ifndef ROBPOLY_HARNESS_HPP
#define ROBPOLY_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robpoly/io.hpp"
#include "robpoly/lowerbounds.hpp"
#include "robpoly/norms_analysis.hpp"
#include "robpoly/regression.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {

struct RunConfig {
  std::optional<int> d;
  std::optional<int> n;
  double eps = 0.5;
  double eta = 0.01;
  double sigma = 0.1;
  double rho = 0.1;
  Distribution dist = Distribution::kChebyshev;
  std::vector<Distribution> dists;  // sweep; empty = {dist}
  int bits = 30;
  Variant variant = Variant::kPlain;
  std::uint64_t seed = 1;
  int trials = 20;
  std::optional<int> m;
  std::optional<std::size_t> samples;     // M
  std::vector<std::size_t> sample_grid;   // sweep M values
  std::vector<double> rho_grid;           // sweep rho values
  double delta = 0.1;
  double c_grid = 2.0;
  int max_iters = 200;
  std::string adversary = "const_blowup";  // or "sign_flip"
  std::optional<double> outlier_magnitude = 1000.0;
  double flip_scale = 10.0;
  std::string inlier_noise = "uniform";    // or "alternating"
  bool strict = false;
  double l1_cell_budget = 1e5;
  // lowerbound
  double C = 1.5;
  int linear_n = 200;
  double linear_sigma = 0.2;
  double linear_C = 2.0;
  std::size_t linear_M = 20;
  // verify-norms
  int norm_polys = 200;

  int RequireD() const;
  int RequireN() const;
};

// Unknown keys and ill-typed values are rejected.
RunConfig ParseRunConfig(const Json& j);
Json RunConfigToJson(const RunConfig& c);

Distribution ParseDistribution(const std::string& s);
const char* ToString(Distribution d);

RecoveryConfig ToRecoveryConfig(const RunConfig& c);
NoiseModel ToNoiseModel(const RunConfig& c);
// cfg.samples or the Chebyshev-measure count at the plan's grid size.
std::size_t PlannedSampleCount(const RunConfig& c);

// Random truth from the seed unless one is given.
SampleSet Simulate(const RunConfig& c, const std::optional<MultiPoly>& truth = {});

struct SweepRow {
  std::size_t M = 0;
  Distribution dist = Distribution::kChebyshev;
  double rho = 0.0;
  BinomialEstimate success;
  double mean_error = 0.0;
  std::uint64_t seed = 0;
};
std::vector<SweepRow> RunSweep(const RunConfig& c);
std::string SweepCsv(const std::vector<SweepRow>& rows);

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct NormsSuite {
  std::vector<CheckRow> checks;
  std::vector<SandwichReport> sandwich;
  std::vector<std::pair<TightnessCase, double>> tightness;  // with numeric ratio
  bool all_pass = false;
};
NormsSuite RunNormsSuite(const RunConfig& c);
std::string TightnessCsv(const NormsSuite& s);
std::string ChecksTable(const std::vector<CheckRow>& rows);

struct LowerboundSuite {
  AdversaryPair pair;
  std::size_t avoidance_M = 0;
  std::vector<IndistinguishabilityResult> rows;
  LinearLbResult linear;
};
LowerboundSuite RunLowerboundSuite(const RunConfig& c);
Json LowerboundToJson(const LowerboundSuite& s);

}  // namespace robpoly

#endif  // ROBPOLY_HARNESS_HPP
