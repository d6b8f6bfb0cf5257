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

#include "robpoly/norms_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "robpoly/error.hpp"
#include "robpoly/quadrature.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {

double SandwichBound(int d, int n) {
  return std::pow(2.0 * std::max(d, 1), 2.0 * n);
}

SandwichReport CheckSandwich(const MultiPoly& p, std::string descriptor) {
  SandwichReport r;
  r.descriptor = std::move(descriptor);
  r.d = p.degree();
  r.n = p.dim();
  r.sup_norm = SupNorm(p);
  r.l1_norm = L1Norm(p);
  r.bound = SandwichBound(r.d, r.n);
  if (r.l1_norm == 0.0) {
    Require(r.sup_norm == 0.0, "CheckSandwich: zero l1 norm for a nonzero polynomial",
            ErrorCode::kNumerical);
    r.ratio = 0.0;
  } else {
    r.ratio = r.sup_norm / r.l1_norm;
  }
  const double dd = std::max(r.d, 1);
  r.implied_constant = std::pow(r.ratio, 1.0 / r.n) / (dd * dd);
  r.pass = r.ratio <= r.bound * (1.0 + 1e-6);
  return r;
}

UniPoly TightnessFactor(int d) {
  Require(d >= 1 && d % 2 == 1, "tightness family needs odd d >= 1");
  const int m = (d - 1) / 2;
  const UniPoly dp = LegendrePDerivative(m + 1);
  return UniPoly::Monomial({0.5, 0.5}) * (dp * dp);
}

TightnessCase TightnessFamily(int d, int n) {
  Require(n >= 1, "tightness family needs n >= 1");
  const UniPoly f = TightnessFactor(d);
  const std::vector<UniPoly> factors(static_cast<std::size_t>(n), f);
  TightnessCase out;
  out.f = MultiPoly::TensorProduct(factors);
  out.d = d;
  out.n = n;
  const double m = (d - 1) / 2;
  out.analytic_ratio = std::pow((m + 1.0) * (m + 2.0) / 2.0, n);
  return out;
}

MeasureEstimate SuperLevelMeasure(const MultiPoly& p, double threshold,
                                  std::size_t samples, std::uint64_t seed) {
  Require(samples > 0, "SuperLevelMeasure: need at least one sample");
  const int n = p.dim();
  const auto pts = DrawPoints(Distribution::kUniform, samples, n, seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::span<const double> x(pts.data() + i * static_cast<std::size_t>(n),
                                    static_cast<std::size_t>(n));
    if (std::abs(p(x)) >= threshold) ++hits;
  }
  const double q = static_cast<double>(hits) / static_cast<double>(samples);
  const double vol = std::ldexp(1.0, n);
  MeasureEstimate e;
  e.threshold = threshold;
  e.measure = vol * q;
  e.std_error = vol * std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
  e.samples = samples;
  return e;
}

MeasureEstimate LargeValueRegion(const MultiPoly& p, std::span<const double> y,
                                 std::size_t samples, std::uint64_t seed) {
  Require(static_cast<int>(y.size()) == p.dim(), "LargeValueRegion: point has wrong dimension",
          ErrorCode::kDimensionMismatch);
  for (double t : y) Require(t >= -1.0 && t <= 1.0, "LargeValueRegion: point outside the cube");
  const double threshold = std::abs(p(y)) / std::ldexp(1.0, p.dim());
  return SuperLevelMeasure(p, threshold, samples, seed);
}

double LargeValueLowerBound(int d, int n) {
  const double dd = std::max(d, 1);
  return std::pow(2.0 * dd * dd, -n);
}

WindowVerdict CheckUnivariateWindow(const UniPoly& g, int grid) {
  Require(grid >= 3, "CheckUnivariateWindow: grid too small");
  WindowVerdict v;
  const int d = g.degree();
  double best = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double x = -1.0 + 2.0 * i / (grid - 1);
    const double a = std::abs(g(x));
    if (a > best) {
      best = a;
      v.x_star = x;
    }
  }
  Require(best > 0.0, "CheckUnivariateWindow: g is zero");
  v.g_star = best;
  if (d >= 1) {
    const double half = 1.0 / (2.0 * d * d);
    v.lo = std::max(-1.0, v.x_star - half);
    v.hi = std::min(1.0, v.x_star + half);
  }
  double lo_val = best;
  for (int i = 0; i < grid; ++i) {
    const double x = v.lo + (v.hi - v.lo) * i / (grid - 1);
    lo_val = std::min(lo_val, std::abs(g(x)));
  }
  v.window_min = lo_val;
  v.holds = lo_val >= best / 2.0 - 1e-9;
  return v;
}

double MarkovRatio(int d) {
  Require(d >= 1, "MarkovRatio: d must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
  c.back() = 1.0;
  const MultiPoly t(1, d, c);
  return SupNorm(t.Derivative(0)) / SupNorm(t);
}

GradientReport CheckGradientBound(const MultiPoly& p, int per_axis) {
  const int n = p.dim();
  const int d = p.degree();
  if (per_axis <= 0) per_axis = n <= 2 ? 257 : (n == 3 ? 49 : 13);
  // Chebyshev-Lobatto points: dense near the ends where gradients peak.
  std::vector<double> axis(static_cast<std::size_t>(per_axis));
  for (int k = 0; k < per_axis; ++k) {
    axis[static_cast<std::size_t>(k)] = -std::cos(std::numbers::pi * k / (per_axis - 1));
  }
  const std::vector<std::vector<double>> grid(static_cast<std::size_t>(n), axis);
  std::vector<double> sq;
  for (int i = 0; i < n; ++i) {
    const auto gi = p.Derivative(i).EvaluateGrid(grid);
    if (sq.empty()) sq.assign(gi.size(), 0.0);
    for (std::size_t k = 0; k < gi.size(); ++k) sq[k] += gi[k] * gi[k];
  }
  GradientReport r;
  for (double v : sq) r.max_gradient = std::max(r.max_gradient, std::sqrt(v));
  r.sup_norm = SupNorm(p);
  r.bound = 2.0 * d * d * r.sup_norm;
  r.pass = r.max_gradient <= r.bound * (1.0 + 1e-9) + 1e-12;
  return r;
}

double LegendreOrthogonalityResidual(const UniPoly& f, int k) {
  Require(k >= 0, "LegendreOrthogonalityResidual: k must be >= 0");
  const UniPoly pk = LegendreP(k);
  const QuadratureRule rule = GaussLegendre((f.degree() + k) / 2 + 2);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * pk(rule.nodes[i]) * f(rule.nodes[i]);
  }
  return std::abs(s);
}

std::string SandwichCsv(std::span<const SandwichReport> rows) {
  std::ostringstream os;
  os.precision(17);
  os << "descriptor,d,n,sup_norm,l1_norm,ratio,bound,pass\n";
  for (const SandwichReport& r : rows) {
    os << r.descriptor << ',' << r.d << ',' << r.n << ',' << r.sup_norm << ',' << r.l1_norm
       << ',' << r.ratio << ',' << r.bound << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace robpoly
