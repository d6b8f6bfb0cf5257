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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "robpoly/error.hpp"
#include "robpoly/lowerbounds.hpp"
#include "robpoly/partition.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {
namespace {

MultiPoly SomePoly(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  return RandomPoly(n, d, rng);
}

TEST(DrawPoints, ChebyshevCellMassOneDim) {
  const std::size_t M = 100000;
  const int m = 8;
  const auto pts = DrawPoints(Distribution::kChebyshev, M, 1, 3);
  const ChebPartition part(m, 1);
  std::vector<std::size_t> counts(m, 0);
  for (double x : pts) ++counts[part.FlatCellOf(std::span<const double>(&x, 1))];
  const double q = 1.0 / m;
  const double se = std::sqrt(q * (1 - q) / M);
  for (int j = 0; j < m; ++j) EXPECT_LE(std::abs(counts[j] / double(M) - q), 4 * se) << j;
}

TEST(DrawPoints, UniformMeanIsZero) {
  const std::size_t M = 100000;
  const auto pts = DrawPoints(Distribution::kUniform, M, 1, 4);
  double mean = 0.0;
  for (double x : pts) mean += x;
  mean /= M;
  // Var of U[-1,1] is 1/3.
  EXPECT_LE(std::abs(mean), 4 * std::sqrt(1.0 / 3.0 / M));
}

TEST(DrawPoints, DeterministicAndInCube) {
  for (auto dist : {Distribution::kUniform, Distribution::kChebyshev}) {
    const auto a = DrawPoints(dist, 1000, 3, 42);
    const auto b = DrawPoints(dist, 1000, 3, 42);
    const auto c = DrawPoints(dist, 1000, 3, 43);
    ASSERT_EQ(a.size(), 3000u);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (double x : a) {
      EXPECT_GE(x, -1.0);
      EXPECT_LE(x, 1.0);
    }
  }
  EXPECT_TRUE(DrawPoints(Distribution::kUniform, 0, 2, 1).empty());
}

TEST(DrawPoints, ChebyshevKolmogorovSmirnov) {
  const std::size_t M = 10000;
  auto pts = DrawPoints(Distribution::kChebyshev, M, 1, 11);
  std::sort(pts.begin(), pts.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    const double cdf = 1.0 - std::acos(pts[i]) / std::numbers::pi;
    ks = std::max({ks, std::abs(cdf - double(i) / M), std::abs(cdf - double(i + 1) / M)});
  }
  // Asymptotic 1% critical value.
  EXPECT_LT(ks, 1.628 / std::sqrt(double(M)));
}

TEST(Label, NoiselessIsExact) {
  const MultiPoly p = SomePoly(2, 3, 1);
  NoiseModel model;
  const SampleSet s = Label(DrawPoints(Distribution::kUniform, 500, 2, 2), 2, p, model, 3);
  ASSERT_EQ(s.size(), 500u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.label(i), p(s.point(i)));
  EXPECT_EQ(std::count(s.outlier_flags().begin(), s.outlier_flags().end(), true), 0);
}

TEST(Label, RejectsBadModels) {
  NoiseModel model;
  model.rho = 1.0;
  EXPECT_THROW(model.Validate(), Error);
  model.rho = 0.5;
  EXPECT_THROW(model.Validate(), Error);
  model.rho = 0.1;
  model.sigma = -1.0;
  EXPECT_THROW(model.Validate(), Error);
  model.sigma = 0.001;
  model.precision_bits = 8;
  EXPECT_THROW(model.Validate(), Error);
  model.sigma = 1.0 / 256;
  EXPECT_NO_THROW(model.Validate());
  NoiseModel bad_rho;
  bad_rho.rho = 1.0;
  EXPECT_THROW(Label(DrawPoints(Distribution::kUniform, 5, 1, 1), 1, MultiPoly(1, 1), bad_rho, 1),
               Error);
}

TEST(Label, OutlierCountBinomial) {
  NoiseModel model;
  model.sigma = 0.1;
  model.rho = 0.3;
  const std::size_t M = 10000;
  const SampleSet s =
      Label(DrawPoints(Distribution::kUniform, M, 2, 5), 2, SomePoly(2, 2, 6), model, 7);
  const auto k = std::count(s.outlier_flags().begin(), s.outlier_flags().end(), true);
  EXPECT_LE(std::abs(double(k) - 3000.0), 4 * std::sqrt(M * 0.3 * 0.7));
}

TEST(Label, InliersWithinSigma) {
  for (auto noise : {InlierNoise::kUniform, InlierNoise::kAlternatingExtreme}) {
    NoiseModel model;
    model.sigma = 0.25;
    model.rho = 0.2;
    model.inlier_noise = noise;
    model.adversary = SignFlipExtreme{};
    const MultiPoly p = SomePoly(2, 3, 8);
    const SampleSet s = Label(DrawPoints(Distribution::kChebyshev, 4000, 2, 9), 2, p, model, 10);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double px = p(s.point(i));
      if (!s.outlier_flags()[i]) {
        EXPECT_LE(std::abs(s.label(i) - px), model.sigma);
        if (noise == InlierNoise::kAlternatingExtreme) {
          EXPECT_NEAR(std::abs(s.label(i) - px), model.sigma, 1e-12);
        }
      } else {
        EXPECT_DOUBLE_EQ(s.label(i), -10.0 * px);
      }
    }
  }
}

TEST(Label, Deterministic) {
  NoiseModel model;
  model.sigma = 0.1;
  model.rho = 0.2;
  const MultiPoly p = SomePoly(2, 2, 1);
  const auto pts = DrawPoints(Distribution::kUniform, 300, 2, 1);
  const SampleSet a = Label(pts, 2, p, model, 99);
  const SampleSet b = Label(pts, 2, p, model, 99);
  EXPECT_TRUE(std::equal(a.labels().begin(), a.labels().end(), b.labels().begin()));
  EXPECT_EQ(a.outlier_flags(), b.outlier_flags());
}

TEST(Adversary, ConstBlowupAlternates) {
  NoiseModel model;
  model.rho = 0.49;
  model.adversary = ConstBlowup{5.0};
  const SampleSet s =
      Label(DrawPoints(Distribution::kUniform, 200, 1, 1), 1, MultiPoly(1, 2), model, 2);
  double expect = 5.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.outlier_flags()[i]) continue;
    EXPECT_EQ(s.label(i), expect);
    expect = -expect;
  }
}

TEST(Adversary, ConstBlowupDefaultScalesWithPoly) {
  NoiseModel model;
  model.rho = 0.3;
  const MultiPoly p = MultiPoly::Constant(1, 0, 2.0);
  const SampleSet s = Label(DrawPoints(Distribution::kUniform, 100, 1, 1), 1, p, model, 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.outlier_flags()[i]) {
      EXPECT_EQ(std::abs(s.label(i)), 3000.0);
    }
  }
}

TEST(Adversary, DegeneratePairLabelsTruth) {
  const MultiPoly f = SomePoly(2, 2, 3);
  NoiseModel model;
  model.adversary = PairIndistinguishable{f, f, Box{{0.5, 0.5}, {1.0, 1.0}}};
  const SampleSet s = Label(DrawPoints(Distribution::kUniform, 500, 2, 4), 2, f, model, 5);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.label(i), f(s.point(i)));
}

TEST(Adversary, PairRegionOutsideCubeRejected) {
  NoiseModel model;
  model.adversary = PairIndistinguishable{MultiPoly(1, 1), MultiPoly(1, 1), Box{{0.5}, {1.5}}};
  EXPECT_THROW(model.Validate(), Error);
}

TEST(Adversary, UniformPairLabelsStayNearF) {
  const AdversaryPair pair = BuildUniformAdversary(4, 2, 1.5);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    NoiseModel model;
    model.adversary = PairIndistinguishable{pair.f, pair.g, pair.distinguishable_region};
    const SampleSet s =
        Label(DrawPoints(Distribution::kUniform, 3000, 2, seed), 2, pair.f, model, seed + 100);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (pair.distinguishable_region.Contains(s.point(i))) {
        EXPECT_EQ(s.label(i), pair.f(s.point(i)));
      } else {
        EXPECT_LE(std::abs(s.label(i) - pair.f(s.point(i))), 1.0 + 1e-12);
      }
    }
  }
}

TEST(RoundBits, Examples) {
  EXPECT_EQ(RoundToBits(0.3, 1), 0.5);
  EXPECT_EQ(RoundToBits(0.25, 1), 0.0);   // tie to even
  EXPECT_EQ(RoundToBits(0.75, 1), 1.0);   // tie to even
  EXPECT_EQ(RoundToBits(-0.3, 2), -0.25);
  EXPECT_THROW(RoundToBits(0.3, 0), Error);
}

TEST(RoundBits, BoundIdempotentAndClamped) {
  NoiseModel model;
  model.sigma = 0.5;
  const SampleSet s =
      Label(DrawPoints(Distribution::kChebyshev, 2000, 2, 6), 2, SomePoly(2, 3, 2), model, 7);
  for (int bits : {1, 3, 10, 30}) {
    const SampleSet r = RoundBits(s, bits);
    const double half = std::ldexp(1.0, -bits - 1);
    for (std::size_t i = 0; i < s.points().size(); ++i) {
      EXPECT_LE(std::abs(r.points()[i] - s.points()[i]), half);
      EXPECT_LE(std::abs(r.points()[i]), 1.0);
    }
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LE(std::abs(r.label(i) - s.label(i)), half);
    const SampleSet rr = RoundBits(r, bits);
    EXPECT_TRUE(std::equal(r.points().begin(), r.points().end(), rr.points().begin()));
    EXPECT_TRUE(std::equal(r.labels().begin(), r.labels().end(), rr.labels().begin()));
    EXPECT_EQ(r.outlier_flags(), s.outlier_flags());
  }
}

TEST(SampleSet, Invariants) {
  EXPECT_THROW(SampleSet(2, {0.1, 0.2, 0.3}, {1.0}), Error);
  EXPECT_THROW(SampleSet(1, {0.1, 0.2}, {1.0}), Error);
  EXPECT_THROW(SampleSet(1, {1.5}, {1.0}), Error);
  const SampleSet s(1, {0.1, 0.2, 0.3}, {1.0, 2.0, 3.0});
  const SampleSet sub = s.Subset({true, false, true});
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub.label(1), 3.0);
}

}  // namespace
}  // namespace robpoly
