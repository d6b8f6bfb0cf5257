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

#ifndef ROBPOLY_LOWERBOUNDS_HPP
#define ROBPOLY_LOWERBOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "robpoly/partition.hpp"
#include "robpoly/polynomial.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {

struct AdversaryPair {
  MultiPoly f{1, 0};
  MultiPoly g{1, 0};
  Box distinguishable_region;
  double sigma_effective = 1.0;
  double alpha = 0.0;   // 4 sqrt(C)
  double C = 0.0;
  double corner_gap = 0.0;      // |f(1) - g(1)|
  double outside_max = 0.0;     // max |f - g| seen off the region
};

// f(x) = prod T_d(x_i + a/d^2) / T_d(1 + a/d^2)^(n-1), g = 0, a = 4 sqrt(C).
AdversaryPair BuildUniformAdversary(int d, int n, double C,
                                    std::size_t check_points = 10000,
                                    std::uint64_t seed = 1);

// Uniform measure of the region: (a / (2 d^2))^n.
double RegionProbability(const AdversaryPair& pair);
// floor((1/3) (2 d^2 / a)^n).
std::size_t AvoidanceSampleBound(int d, int n, double C);

struct BinomialEstimate {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double std_error = 0.0;
};
// Wilson score interval at z standard errors.
BinomialEstimate Wilson(std::size_t successes, std::size_t trials, double z = 1.96);

using Estimator = std::function<MultiPoly(const SampleSet&)>;

// Median recovery with default settings; zero polynomial on empty input.
Estimator DefaultEstimator(int d, int n);

struct IndistinguishabilityResult {
  std::size_t M = 0;
  BinomialEstimate failure;
  BinomialEstimate avoided;  // trials with every sample off the region
};

IndistinguishabilityResult RunIndistinguishabilityExperiment(
    const AdversaryPair& pair, std::size_t M, std::size_t trials,
    std::uint64_t seed, const Estimator& estimator = {});

std::vector<IndistinguishabilityResult> RunIndistinguishabilitySweep(
    const AdversaryPair& pair, std::span<const std::size_t> Ms,
    std::size_t trials, std::uint64_t seed, const Estimator& estimator = {});

struct LinearLbResult {
  int n = 0;
  double sigma = 0.0;
  std::size_t M = 0;
  BinomialEstimate all_bad;
  double hoeffding_bound = 0.0;  // 1 - M exp(-n sigma^2 / 2)
};

LinearLbResult RunLinearLbExperiment(int n, double sigma, double C,
                                     std::size_t M, std::size_t trials,
                                     std::uint64_t seed);

// b_j = -1 + 2j/m, j = 0..m.
std::vector<double> NodeLattice(int m);
// Index of the closest node per axis; ties go to the smaller index.
std::vector<int> ClosestNode(std::span<const double> x, int m);

std::string FailureCsv(std::span<const IndistinguishabilityResult> rows);

}  // namespace robpoly

#endif  // ROBPOLY_LOWERBOUNDS_HPP
