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

#ifndef ROBPOLY_SAMPLING_HPP
#define ROBPOLY_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "robpoly/partition.hpp"
#include "robpoly/polynomial.hpp"

namespace robpoly {

// Seeded generator with platform-independent conversions (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 of (root, index); used for per-trial seeds.
std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t index);

// Chebyshev coefficients i.i.d. uniform on [-1, 1].
MultiPoly RandomPoly(int n, int d, Rng& rng);

// Outliers get +K, -K, +K, ... in sample order. K defaults to
// 1e3 * (1 + CoeffAbsSum(p)).
struct ConstBlowup {
  std::optional<double> magnitude;
};

// Outliers get -scale * p(x).
struct SignFlipExtreme {
  double scale = 10.0;
};

// Coin-flips p' in {f, g} once per labelling. Points inside `distinguishable`
// are labelled by the true polynomial, all others by p'.
struct PairIndistinguishable {
  MultiPoly f;
  MultiPoly g;
  Box distinguishable;
};

using Adversary = std::variant<ConstBlowup, SignFlipExtreme, PairIndistinguishable>;

enum class InlierNoise {
  kUniform,             // uniform on [-sigma, sigma]
  kAlternatingExtreme,  // +sigma, -sigma, ... in inlier order
};

struct NoiseModel {
  double sigma = 0.0;
  double rho = 0.0;
  Adversary adversary = ConstBlowup{};
  InlierNoise inlier_noise = InlierNoise::kUniform;
  std::optional<int> precision_bits;

  // rho in [0, 1/2), sigma >= 0, sigma >= 2^-N when N is set.
  void Validate() const;
};

// Points are stored flat (sample-major). Ground truth is optional and only
// used by experiments and tests.
class SampleSet {
 public:
  SampleSet(int n, std::vector<double> points, std::vector<double> labels);

  int dim() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  std::span<const double> points() const { return points_; }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(points_).subspan(i * static_cast<std::size_t>(n_),
                                                    static_cast<std::size_t>(n_));
  }
  std::span<const double> labels() const { return labels_; }
  double label(std::size_t i) const { return labels_[i]; }

  // Empty when unknown; otherwise one flag per sample.
  const std::vector<bool>& outlier_flags() const { return is_outlier_; }
  const std::optional<MultiPoly>& truth() const { return truth_; }

  SampleSet WithTruth(std::optional<MultiPoly> p, std::vector<bool> is_outlier) const;
  // Samples whose index satisfies keep[i].
  SampleSet Subset(const std::vector<bool>& keep) const;

 private:
  int n_;
  std::vector<double> points_;
  std::vector<double> labels_;
  std::vector<bool> is_outlier_;
  std::optional<MultiPoly> truth_;
};

// Uniform: i.i.d. on [-1,1]^n. Chebyshev: each coordinate cos(pi U).
std::vector<double> DrawPoints(Distribution dist, std::size_t count, int n,
                               std::uint64_t seed);

// Labels `points` from p under `model` and records ground truth.
SampleSet Label(std::vector<double> points, int n, const MultiPoly& p,
                const NoiseModel& model, std::uint64_t seed);

// Nearest multiple of 2^-bits, ties to even.
double RoundToBits(double v, int bits);

// Rounds every coordinate and label; coordinates are clamped to [-1, 1].
SampleSet RoundBits(const SampleSet& s, int bits);

}  // namespace robpoly

#endif  // ROBPOLY_SAMPLING_HPP
