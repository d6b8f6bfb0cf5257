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

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "robpoly/error.hpp"
#include "robpoly/io.hpp"
#include "robpoly/polynomial.hpp"
#include "robpoly/quadrature.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {
namespace {

MultiPoly UnitCoeff(int n, int d, std::vector<int> alpha) {
  MultiPoly p(n, d);
  std::vector<double> c(p.size(), 0.0);
  c[p.FlatIndex(alpha)] = 1.0;
  return MultiPoly(n, d, c);
}

TEST(Eval, ConstantPolynomial) {
  const MultiPoly p = MultiPoly::Constant(2, 0, 1.0);
  EXPECT_DOUBLE_EQ(p({0.3, -0.7}), 1.0);
}

TEST(Eval, SingleChebyshevTerm) {
  const MultiPoly p = UnitCoeff(1, 3, {3});
  EXPECT_NEAR(p({0.5}), -1.0, 1e-14);
}

TEST(Eval, MatchesMonomialOracleAtFixedPoint) {
  Rng rng(2024);
  const MultiPoly p = RandomPoly(2, 3, rng);
  const std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  const double want = oracle::EvalViaMonomials(c, 2, 3, {0.25, 0.5});
  EXPECT_NEAR(p({0.25, 0.5}), want, 1e-12 * std::max(1.0, std::abs(want)));
}

TEST(Eval, DimensionMismatchRejected) {
  const MultiPoly p(2, 1);
  try {
    p({0.1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Eval, BasisConsistencyProperty) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const int d = trial % 6;
    const MultiPoly p = RandomPoly(n, d, rng);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = rng.Uniform(-1.0, 1.0);
    const std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
    const double want = oracle::EvalViaMonomials(c, n, d, x);
    EXPECT_NEAR(p(x), want, 1e-10 * std::abs(want) + 1e-13) << "trial " << trial;
  }
}

TEST(Eval, GridMatchesPointwise) {
  Rng rng(9);
  const MultiPoly p = RandomPoly(2, 4, rng);
  const std::vector<std::vector<double>> axes{{-1.0, -0.3, 0.2, 1.0}, {-0.9, 0.0, 0.75}};
  const auto vals = p.EvaluateGrid(axes);
  ASSERT_EQ(vals.size(), 12u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(vals[i * 3 + j], p({axes[0][i], axes[1][j]}), 1e-13);
    }
  }
}

TEST(ChebyshevT, DegreeTwoCoefficients) {
  const UniPoly t = ChebyshevT(2).ToMonomial();
  ASSERT_EQ(t.degree(), 2);
  EXPECT_DOUBLE_EQ(t.coeff(0), -1.0);
  EXPECT_DOUBLE_EQ(t.coeff(1), 0.0);
  EXPECT_DOUBLE_EQ(t.coeff(2), 2.0);
}

TEST(ChebyshevT, DegreeZeroIsOne) {
  const UniPoly t = ChebyshevT(0).ToMonomial();
  EXPECT_EQ(t.degree(), 0);
  EXPECT_DOUBLE_EQ(t.coeff(0), 1.0);
}

TEST(ChebyshevT, ExtremaAreUnit) {
  const UniPoly t = ChebyshevT(5);
  for (int k = 0; k <= 5; ++k) {
    const double x = std::cos(std::numbers::pi * k / 5.0);
    EXPECT_NEAR(std::abs(t(x)), 1.0, 1e-12) << k;
  }
}

TEST(ChebyshevT, MatchesCosineAndIsBounded) {
  Rng rng(3);
  for (int d = 0; d <= 10; ++d) {
    const UniPoly t = ChebyshevT(d);
    for (int k = 0; k < 1000; ++k) {
      const double x = rng.Uniform(-1.0, 1.0);
      const double v = t(x);
      EXPECT_LE(std::abs(v), 1.0 + 1e-12);
      if (k < 50) {
        EXPECT_NEAR(v, std::cos(d * std::acos(x)), 1e-10);
      }
    }
  }
}

TEST(Legendre, DerivativeAtOne) {
  EXPECT_NEAR(LegendrePDerivative(2)(1.0), 3.0, 1e-12);
  for (int k = 0; k <= 8; ++k) {
    EXPECT_NEAR(LegendrePDerivative(k)(1.0), k * (k + 1) / 2.0, 1e-10) << k;
    EXPECT_NEAR(LegendreP(k)(1.0), 1.0, 1e-12) << k;
  }
}

TEST(Legendre, ZeroIsOne) {
  const UniPoly p = LegendreP(0).ToMonomial();
  EXPECT_EQ(p.degree(), 0);
  EXPECT_DOUBLE_EQ(p.coeff(0), 1.0);
}

TEST(Legendre, Orthogonality) {
  const QuadratureRule rule = GaussLegendre(12);
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= 8; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * LegendreP(j)(rule.nodes[i]) * LegendreP(k)(rule.nodes[i]);
      }
      if (j == k) {
        EXPECT_NEAR(s, 2.0 / (2 * k + 1), 1e-12);
      } else {
        EXPECT_NEAR(s, 0.0, 1e-9) << j << "," << k;
      }
    }
  }
}

TEST(SupNorm, ChebyshevTermIsOne) {
  EXPECT_DOUBLE_EQ(SupNorm(UnitCoeff(1, 3, {3})), 1.0);
}

TEST(SupNorm, HnIsOne) {
  const std::vector<UniPoly> f(2, UniPoly::Monomial({0, 0, 0, 1}));
  EXPECT_NEAR(SupNorm(MultiPoly::TensorProduct(f)), 1.0, 1e-12);
}

TEST(SupNorm, MatchesDenseGridOracle) {
  Rng rng(11);
  for (int t = 0; t < 3; ++t) {
    const MultiPoly p = RandomPoly(2, 2, rng);
    const double want = oracle::DenseGridMax([&](const std::vector<double>& x) { return p(x); }, 2, 2001);
    EXPECT_NEAR(SupNorm(p), want, 1e-6);
  }
}

TEST(SupNorm, MonotoneInResolutionAndBelowCoeffSum) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const MultiPoly p = RandomPoly(1 + t % 3, 1 + t % 5, rng);
    const double lo = SupNorm(p, 8);
    const double hi = SupNorm(p, 64);
    EXPECT_LE(lo, hi + 1e-12);
    EXPECT_LE(hi, CoeffAbsSum(p) + 1e-12);
  }
}

TEST(L1Norm, HnQuarter) {
  const std::vector<UniPoly> f(2, UniPoly::Monomial({0, 0, 0, 1}));
  EXPECT_NEAR(L1Norm(MultiPoly::TensorProduct(f)), 0.25, 1e-6);
}

TEST(L1Norm, ConstantIsVolume) {
  EXPECT_NEAR(L1Norm(MultiPoly::Constant(1, 0, 1.0)), 2.0, 1e-12);
  EXPECT_NEAR(L1Norm(MultiPoly::Constant(3, 2, -1.0)), 8.0, 1e-10);
}

TEST(L1Norm, LegendreTightnessRatio) {
  // ((x+1)/2) (P_2'(x))^2 with P_2' = 3x.
  const UniPoly f = UniPoly::Monomial({0.5, 0.5}) * UniPoly::Monomial({0, 0, 9});
  const std::vector<UniPoly> fs{f};
  const MultiPoly p = MultiPoly::TensorProduct(fs);
  EXPECT_NEAR(SupNorm(p) / L1Norm(p), 3.0, 1e-6);
}

TEST(UniPoly, ComposeAffineKeepsDegree) {
  for (int d = 0; d <= 6; ++d) {
    const UniPoly t = ChebyshevT(d);
    const UniPoly shifted = t.ComposeAffine(0.5, 0.25);
    EXPECT_EQ(shifted.degree(), d);
    for (double x : {-1.0, -0.3, 0.2, 1.0}) EXPECT_NEAR(shifted(x), t(0.5 * x + 0.25), 1e-12);
  }
}

TEST(L1Norm, SignChangingMatchesClosedForm) {
  EXPECT_NEAR(L1Norm(UnitCoeff(1, 1, {1})), 1.0, 1e-9);
  // integral of |2x^2 - 1| over [-1, 1]
  EXPECT_NEAR(L1Norm(UnitCoeff(1, 2, {2})), (4.0 * std::numbers::sqrt2 - 2.0) / 3.0, 1e-7);
}

TEST(Arithmetic, SubSelfIsZero) {
  Rng rng(5);
  const MultiPoly p = RandomPoly(2, 3, rng);
  EXPECT_TRUE(Sub(p, p).IsZero());
  EXPECT_TRUE(Scale(p, 0.0).IsZero());
}

TEST(Arithmetic, AddChebyshevAndConstant) {
  const MultiPoly t2 = UnitCoeff(1, 2, {2});
  const MultiPoly one = MultiPoly::Constant(1, 0, 1.0);
  EXPECT_NEAR(Add(t2, one)({0.0}), 0.0, 1e-15);
}

TEST(Arithmetic, PointwiseAgreement) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const MultiPoly p = RandomPoly(2, 2, rng);
    const MultiPoly q = RandomPoly(2, 4, rng);
    const std::vector<double> x{rng.Uniform(-1, 1), rng.Uniform(-1, 1)};
    EXPECT_NEAR(Add(p, q)(x), p(x) + q(x), 1e-10);
    EXPECT_NEAR(Sub(p, q)(x), p(x) - q(x), 1e-10);
    EXPECT_NEAR(Scale(p, -2.5)(x), -2.5 * p(x), 1e-10);
  }
}

TEST(Arithmetic, DimensionMismatch) {
  EXPECT_THROW(Add(MultiPoly(1, 1), MultiPoly(2, 1)), Error);
}

TEST(CoeffAbsSum, Examples) {
  EXPECT_EQ(CoeffAbsSum(MultiPoly(2, 3)), 0.0);
  EXPECT_EQ(CoeffAbsSum(UnitCoeff(2, 3, {1, 2})), 1.0);
  Rng rng(8);
  const MultiPoly p = RandomPoly(3, 2, rng);
  double s = 0.0;
  for (double c : p.coeffs()) s += std::fabs(c);
  EXPECT_DOUBLE_EQ(CoeffAbsSum(p), s);
}

TEST(Derivative, MarkovEqualityForChebyshev) {
  for (int d = 1; d <= 9; ++d) {
    const MultiPoly t = UnitCoeff(1, d, {d});
    const MultiPoly dt = t.Derivative(0);
    EXPECT_NEAR(dt({1.0}), d * d, 1e-9);
    EXPECT_NEAR(SupNorm(dt) / SupNorm(t), d * d, 1e-6 * d * d);
  }
}

TEST(Derivative, GradientMatchesFiniteDifference) {
  Rng rng(10);
  const MultiPoly p = RandomPoly(3, 3, rng);
  const std::vector<double> x{0.1, -0.4, 0.65};
  const auto g = p.Gradient(x);
  for (int i = 0; i < 3; ++i) {
    auto xp = x;
    auto xm = x;
    xp[static_cast<std::size_t>(i)] += 1e-6;
    xm[static_cast<std::size_t>(i)] -= 1e-6;
    EXPECT_NEAR(g[static_cast<std::size_t>(i)], (p(xp) - p(xm)) / 2e-6, 1e-6);
  }
}

TEST(Polynomial, ZeroDegreeSupportedEverywhere) {
  const MultiPoly c = MultiPoly::Constant(3, 0, -2.0);
  EXPECT_DOUBLE_EQ(c({0.1, 0.2, 0.3}), -2.0);
  EXPECT_DOUBLE_EQ(SupNorm(c), 2.0);
  EXPECT_TRUE(c.Derivative(1).IsZero());
}

TEST(Polynomial, InvalidConstruction) {
  EXPECT_THROW(MultiPoly(0, 1), Error);
  EXPECT_THROW(MultiPoly(2, -1), Error);
  EXPECT_THROW(MultiPoly(1, 1, {1.0}), Error);
  EXPECT_THROW(MultiPoly(1, 1, {1.0, std::nan("")}), Error);
}

TEST(PolyJson, RoundTrip) {
  Rng rng(4);
  const MultiPoly p = RandomPoly(2, 3, rng);
  const Json j = PolyToJson(p);
  EXPECT_EQ(j["basis"], "chebyshev");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["d"], 3);
  const MultiPoly q = PolyFromJson(Json::parse(j.dump()));
  ASSERT_EQ(q.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(q.coeffs()[i], p.coeffs()[i]);
}

TEST(PolyJson, RejectsMalformed) {
  EXPECT_THROW(PolyFromJson(Json::parse(R"({"n":1,"d":1,"coeffs":[1]})")), Error);
  EXPECT_THROW(PolyFromJson(Json::parse(R"({"n":1,"d":1,"basis":"monomial","coeffs":[1,2]})")), Error);
  EXPECT_THROW(PolyFromJson(Json::parse(R"({"d":1,"coeffs":[1,2]})")), Error);
}

TEST(Quadrature, GaussLegendreExactness) {
  for (int k = 1; k <= 10; ++k) {
    const QuadratureRule r = GaussLegendre(k);
    for (int deg = 0; deg <= 2 * k - 1; ++deg) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double want = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      EXPECT_NEAR(s, want, 1e-13) << k << " " << deg;
    }
  }
}

}  // namespace
}  // namespace robpoly
