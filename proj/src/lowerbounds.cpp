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

#include "robpoly/lowerbounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "robpoly/error.hpp"
#include "robpoly/regression.hpp"

namespace robpoly {

AdversaryPair BuildUniformAdversary(int d, int n, double C,
                                    std::size_t check_points, std::uint64_t seed) {
  Require(n >= 1, "adversary: n must be >= 1");
  Require(C > 0.0 && std::isfinite(C), "adversary: C must be positive");
  const double alpha = 4.0 * std::sqrt(C);
  Require(d >= 1 && d > std::sqrt(alpha / 2.0),
          "adversary: need d > sqrt(alpha/2) = " + std::to_string(std::sqrt(alpha / 2.0)));
  const double shift = alpha / (static_cast<double>(d) * d);
  const UniPoly t = ChebyshevT(d).ComposeAffine(1.0, shift);
  const double top = t(1.0);
  std::vector<UniPoly> factors(static_cast<std::size_t>(n), t);
  AdversaryPair pair;
  pair.f = Scale(MultiPoly::TensorProduct(factors), std::pow(top, -(n - 1)));
  pair.g = MultiPoly(n, d);
  pair.alpha = alpha;
  pair.C = C;
  pair.sigma_effective = 1.0;
  pair.distinguishable_region.lo.assign(static_cast<std::size_t>(n), 1.0 - shift);
  pair.distinguishable_region.hi.assign(static_cast<std::size_t>(n), 1.0);

  const std::vector<double> corner(static_cast<std::size_t>(n), 1.0);
  pair.corner_gap = std::abs(pair.f(corner) - pair.g(corner));
  if (!(pair.corner_gap > 2.0 * C * pair.sigma_effective)) {
    Fail(ErrorCode::kNumerical, "adversary: corner gap " + std::to_string(pair.corner_gap) +
                                    " does not exceed 2C");
  }
  // Off the region some coordinate lies below 1 - shift.
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < check_points; ++k) {
    for (double& v : x) v = rng.Uniform(-1.0, 1.0);
    const std::size_t axis = static_cast<std::size_t>(rng.Next() % static_cast<std::uint64_t>(n));
    x[axis] = rng.Uniform(-1.0, 1.0 - shift);
    if (k == 0) x[axis] = 1.0 - shift;
    pair.outside_max = std::max(pair.outside_max, std::abs(pair.f(x) - pair.g(x)));
  }
  if (pair.outside_max > pair.sigma_effective + 1e-9) {
    Fail(ErrorCode::kNumerical, "adversary: |f - g| reaches " + std::to_string(pair.outside_max) +
                                    " off the region");
  }
  return pair;
}

double RegionProbability(const AdversaryPair& pair) {
  double p = 1.0;
  const Box& b = pair.distinguishable_region;
  for (std::size_t i = 0; i < b.lo.size(); ++i) p *= (b.hi[i] - b.lo[i]) / 2.0;
  return p;
}

std::size_t AvoidanceSampleBound(int d, int n, double C) {
  const double alpha = 4.0 * std::sqrt(C);
  const double base = 2.0 * d * d / alpha;
  return static_cast<std::size_t>(std::floor(std::pow(base, n) / 3.0));
}

BinomialEstimate Wilson(std::size_t successes, std::size_t trials, double z) {
  BinomialEstimate e;
  e.successes = successes;
  e.trials = trials;
  if (trials == 0) {
    e.ci_high = 1.0;
    return e;
  }
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  e.rate = p;
  e.std_error = std::sqrt(p * (1.0 - p) / t);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (p + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
  e.ci_low = std::max(0.0, center - half);
  e.ci_high = std::min(1.0, center + half);
  return e;
}

Estimator DefaultEstimator(int d, int n) {
  return [d, n](const SampleSet& s) {
    if (s.size() == 0) return MultiPoly(n, d);
    RecoveryConfig cfg;
    cfg.d = d;
    cfg.n = n;
    return MedianRecover(s, cfg).p_hat;
  };
}

IndistinguishabilityResult RunIndistinguishabilityExperiment(
    const AdversaryPair& pair, std::size_t M, std::size_t trials,
    std::uint64_t seed, const Estimator& estimator) {
  Require(trials > 0, "experiment: trials must be positive");
  const int n = pair.f.dim();
  const int d = std::max(pair.f.degree(), pair.g.degree());
  const Estimator est = estimator ? estimator : DefaultEstimator(d, n);
  std::size_t failures = 0;
  std::size_t avoided = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t ts = DeriveSeed(seed, t);
    Rng coin(DeriveSeed(ts, 0));
    const MultiPoly& p = coin.Bernoulli(0.5) ? pair.f : pair.g;
    auto pts = DrawPoints(Distribution::kUniform, M, n, DeriveSeed(ts, 1));
    bool all_out = true;
    for (std::size_t i = 0; i < M && all_out; ++i) {
      const std::span<const double> x(pts.data() + i * static_cast<std::size_t>(n),
                                      static_cast<std::size_t>(n));
      if (pair.distinguishable_region.Contains(x)) all_out = false;
    }
    if (all_out) ++avoided;
    NoiseModel model;
    model.sigma = pair.sigma_effective;
    model.adversary = PairIndistinguishable{pair.f, pair.g, pair.distinguishable_region};
    const SampleSet s = Label(std::move(pts), n, p, model, DeriveSeed(ts, 2));
    const MultiPoly p_hat = est(s);
    const double err = SupNorm(Sub(p_hat, p));
    if (!(err <= pair.C * pair.sigma_effective)) ++failures;
  }
  IndistinguishabilityResult r;
  r.M = M;
  r.failure = Wilson(failures, trials);
  r.avoided = Wilson(avoided, trials);
  return r;
}

std::vector<IndistinguishabilityResult> RunIndistinguishabilitySweep(
    const AdversaryPair& pair, std::span<const std::size_t> Ms,
    std::size_t trials, std::uint64_t seed, const Estimator& estimator) {
  std::vector<IndistinguishabilityResult> out;
  for (std::size_t k = 0; k < Ms.size(); ++k) {
    out.push_back(RunIndistinguishabilityExperiment(pair, Ms[k], trials, DeriveSeed(seed, k),
                                                    estimator));
  }
  return out;
}

LinearLbResult RunLinearLbExperiment(int n, double sigma, double C,
                                     std::size_t M, std::size_t trials,
                                     std::uint64_t seed) {
  Require(n >= 1, "linear experiment: n must be >= 1");
  Require(sigma > 0.0 && C > 0.0, "linear experiment: sigma and C must be positive");
  Require(sigma < 1.0 / (2.0 * C), "linear experiment: need sigma < 1/(2C)");
  Require(trials > 0, "linear experiment: trials must be positive");
  std::size_t all_bad = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(DeriveSeed(seed, t));
    rng.Bernoulli(0.5);  // which of g = 0, h = mean(x) is the truth; labels agree off the bad set
    bool bad = true;
    for (std::size_t i = 0; i < M && bad; ++i) {
      double h = 0.0;
      for (int k = 0; k < n; ++k) h += rng.Uniform(-1.0, 1.0);
      h /= n;
      if (std::abs(h) > sigma) bad = false;
    }
    if (bad) ++all_bad;
  }
  LinearLbResult r;
  r.n = n;
  r.sigma = sigma;
  r.M = M;
  r.all_bad = Wilson(all_bad, trials);
  r.hoeffding_bound = 1.0 - static_cast<double>(M) * std::exp(-n * sigma * sigma / 2.0);
  return r;
}

std::vector<double> NodeLattice(int m) {
  Require(m >= 1, "NodeLattice: m must be >= 1");
  std::vector<double> b(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) b[static_cast<std::size_t>(j)] = -1.0 + 2.0 * j / m;
  return b;
}

std::vector<int> ClosestNode(std::span<const double> x, int m) {
  Require(m >= 1, "ClosestNode: m must be >= 1");
  std::vector<int> out;
  out.reserve(x.size());
  for (double t : x) {
    Require(t >= -1.0 && t <= 1.0, "ClosestNode: coordinate outside [-1, 1]");
    const double s = (t + 1.0) * m / 2.0;
    int j = static_cast<int>(std::floor(s));
    j = std::clamp(j, 0, m);
    // Compare against the next node; a tie keeps the lower index.
    if (j < m) {
      const double dl = std::abs(t - (-1.0 + 2.0 * j / m));
      const double du = std::abs(t - (-1.0 + 2.0 * (j + 1) / m));
      if (du < dl) ++j;
    }
    out.push_back(j);
  }
  return out;
}

std::string FailureCsv(std::span<const IndistinguishabilityResult> rows) {
  std::ostringstream os;
  os.precision(17);
  os << "M,failure_rate,ci_low,ci_high\n";
  for (const auto& r : rows) {
    os << r.M << ',' << r.failure.rate << ',' << r.failure.ci_low << ',' << r.failure.ci_high << '\n';
  }
  return os.str();
}

}  // namespace robpoly
