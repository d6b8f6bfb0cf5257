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

#include "robpoly/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "robpoly/error.hpp"

namespace robpoly {

std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void NoiseModel::Validate() const {
  Require(std::isfinite(sigma) && sigma >= 0.0, "noise model: sigma must be >= 0");
  Require(rho >= 0.0 && rho < 0.5, "noise model: rho must lie in [0, 0.5)");
  if (precision_bits) {
    Require(*precision_bits >= 1, "noise model: precision bits must be >= 1");
    Require(sigma >= std::ldexp(1.0, -*precision_bits),
            "noise model: sigma must be at least 2^-N for N-bit samples");
  }
  if (const auto* c = std::get_if<ConstBlowup>(&adversary); c && c->magnitude) {
    Require(std::isfinite(*c->magnitude), "const_blowup: magnitude must be finite");
  }
  if (const auto* pair = std::get_if<PairIndistinguishable>(&adversary)) {
    Require(pair->f.dim() == pair->g.dim(), "pair adversary: f and g differ in dimension",
            ErrorCode::kDimensionMismatch);
    const Box& b = pair->distinguishable;
    Require(b.lo.size() == static_cast<std::size_t>(pair->f.dim()) &&
                b.hi.size() == b.lo.size(),
            "pair adversary: region has wrong dimension", ErrorCode::kDimensionMismatch);
    for (std::size_t i = 0; i < b.lo.size(); ++i) {
      Require(b.lo[i] >= -1.0 && b.hi[i] <= 1.0 && b.lo[i] <= b.hi[i],
              "pair adversary: region must be a box inside the cube");
    }
  }
}

SampleSet::SampleSet(int n, std::vector<double> points, std::vector<double> labels)
    : n_(n), points_(std::move(points)), labels_(std::move(labels)) {
  Require(n >= 1, "SampleSet: dimension must be positive");
  Require(points_.size() == labels_.size() * static_cast<std::size_t>(n),
          "SampleSet: " + std::to_string(labels_.size()) + " labels but " +
              std::to_string(points_.size()) + " coordinates",
          ErrorCode::kDimensionMismatch);
  for (double v : points_) {
    Require(v >= -1.0 && v <= 1.0, "SampleSet: point outside [-1,1]^n");
  }
}

SampleSet SampleSet::WithTruth(std::optional<MultiPoly> p,
                               std::vector<bool> is_outlier) const {
  Require(is_outlier.empty() || is_outlier.size() == size(),
          "SampleSet: outlier flags not aligned with samples",
          ErrorCode::kDimensionMismatch);
  if (p) {
    Require(p->dim() == n_, "SampleSet: truth polynomial has wrong dimension",
            ErrorCode::kDimensionMismatch);
  }
  SampleSet out = *this;
  out.truth_ = std::move(p);
  out.is_outlier_ = std::move(is_outlier);
  return out;
}

SampleSet SampleSet::Subset(const std::vector<bool>& keep) const {
  Require(keep.size() == size(), "SampleSet::Subset: mask size mismatch",
          ErrorCode::kDimensionMismatch);
  std::vector<double> pts;
  std::vector<double> ys;
  std::vector<bool> flags;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!keep[i]) continue;
    const auto x = point(i);
    pts.insert(pts.end(), x.begin(), x.end());
    ys.push_back(labels_[i]);
    if (!is_outlier_.empty()) flags.push_back(is_outlier_[i]);
  }
  SampleSet out(n_, std::move(pts), std::move(ys));
  out.truth_ = truth_;
  out.is_outlier_ = std::move(flags);
  return out;
}

MultiPoly RandomPoly(int n, int d, Rng& rng) {
  MultiPoly p(n, d);
  std::vector<double> c(p.size());
  for (double& v : c) v = rng.Uniform(-1.0, 1.0);
  return MultiPoly(n, d, std::move(c));
}

std::vector<double> DrawPoints(Distribution dist, std::size_t count, int n,
                               std::uint64_t seed) {
  Require(n >= 1, "DrawPoints: dimension must be positive");
  Rng rng(seed);
  std::vector<double> pts(count * static_cast<std::size_t>(n));
  for (double& v : pts) {
    if (dist == Distribution::kUniform) {
      v = std::clamp(2.0 * rng.Uniform() - 1.0, -1.0, 1.0);
    } else {
      // Inverse CDF of the arcsine law.
      v = std::cos(std::numbers::pi * rng.Uniform());
    }
  }
  return pts;
}

namespace {

// y with |y - center| <= radius in floating point.
double PullInside(double y, double center, double radius) {
  while (std::abs(y - center) > radius) y = std::nextafter(y, center);
  return y;
}

}  // namespace

SampleSet Label(std::vector<double> points, int n, const MultiPoly& p,
                const NoiseModel& model, std::uint64_t seed) {
  model.Validate();
  Require(p.dim() == n, "Label: polynomial dimension differs from points",
          ErrorCode::kDimensionMismatch);
  const std::size_t count = points.size() / static_cast<std::size_t>(n);
  Rng rng(seed);
  std::vector<double> labels(count);
  std::vector<bool> flags(count, false);

  const auto* pair = std::get_if<PairIndistinguishable>(&model.adversary);
  const MultiPoly* p_prime = nullptr;
  if (pair) {
    Require(pair->f.dim() == n, "pair adversary: wrong dimension",
            ErrorCode::kDimensionMismatch);
    p_prime = rng.Bernoulli(0.5) ? &pair->f : &pair->g;
  }
  double blowup = 0.0;
  if (const auto* c = std::get_if<ConstBlowup>(&model.adversary)) {
    blowup = c->magnitude.value_or(1e3 * (1.0 + CoeffAbsSum(p)));
  }

  std::size_t outlier_count = 0;
  std::size_t inlier_count = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::span<const double> x(points.data() + i * static_cast<std::size_t>(n),
                                    static_cast<std::size_t>(n));
    const double px = p(x);
    const bool outlier = rng.Bernoulli(model.rho);
    const double u = rng.Uniform(-1.0, 1.0);
    flags[i] = outlier;
    if (pair) {
      labels[i] = pair->distinguishable.Contains(x) ? px : (*p_prime)(x);
      continue;
    }
    if (outlier) {
      if (std::holds_alternative<ConstBlowup>(model.adversary)) {
        labels[i] = (outlier_count % 2 == 0) ? blowup : -blowup;
      } else {
        labels[i] = -std::get<SignFlipExtreme>(model.adversary).scale * px;
      }
      ++outlier_count;
      continue;
    }
    double noise = model.sigma * u;
    if (model.inlier_noise == InlierNoise::kAlternatingExtreme) {
      noise = (inlier_count % 2 == 0) ? model.sigma : -model.sigma;
    }
    ++inlier_count;
    labels[i] = PullInside(px + noise, px, model.sigma);
  }
  SampleSet s(n, std::move(points), std::move(labels));
  return s.WithTruth(p, std::move(flags));
}

double RoundToBits(double v, int bits) {
  Require(bits >= 1, "RoundToBits: bits must be >= 1");
  // nearbyint honours the default round-to-nearest-even mode.
  return std::ldexp(std::nearbyint(std::ldexp(v, bits)), -bits);
}

SampleSet RoundBits(const SampleSet& s, int bits) {
  std::vector<double> pts(s.points().begin(), s.points().end());
  for (double& v : pts) v = std::clamp(RoundToBits(v, bits), -1.0, 1.0);
  std::vector<double> ys(s.labels().begin(), s.labels().end());
  for (double& v : ys) v = RoundToBits(v, bits);
  SampleSet out(s.dim(), std::move(pts), std::move(ys));
  return out.WithTruth(s.truth(), s.outlier_flags());
}

}  // namespace robpoly
