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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "robpoly/lowerbounds.hpp"
#include "robpoly/lp.hpp"
#include "robpoly/norms_analysis.hpp"
#include "robpoly/partition.hpp"
#include "robpoly/polynomial.hpp"
#include "robpoly/regression.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {
namespace {

constexpr double kDelta = 0.1;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string Fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

MultiPoly SeededPoly(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  return RandomPoly(n, d, rng);
}

SampleSet ChebSamples(const MultiPoly& p, std::size_t M, double sigma, double rho,
                      std::uint64_t seed) {
  NoiseModel model;
  model.sigma = sigma;
  model.rho = rho;
  model.adversary = ConstBlowup{1e3};
  return Label(DrawPoints(Distribution::kChebyshev, M, p.dim(), DeriveSeed(seed, 1)), p.dim(), p,
               model, DeriveSeed(seed, 2));
}

RecoveryConfig Config(int d, int n, double eps, double eta, double rho) {
  RecoveryConfig cfg;
  cfg.d = d;
  cfg.n = n;
  cfg.eps = eps;
  cfg.eta = eta;
  cfg.rho = rho;
  return cfg;
}

// Criterion 1.
Verdict ExactRecovery() {
  const auto t0 = std::chrono::steady_clock::now();
  const int d = 3;
  const int n = 2;
  RecoveryConfig cfg = Config(d, n, 0.5, 1e-6, 0.0);
  const int m = PlainGridSize(cfg);
  const int want_m = static_cast<int>(std::ceil(d * n * 2 / (0.5 / 7)));
  if (m != want_m) return {false, Fmt("grid m=%d, expected %d", m, want_m)};
  const ChebPartition part(m, n);
  const MultiPoly p = SeededPoly(n, d, 1);
  std::vector<double> pts;
  std::vector<double> ys;
  for (std::size_t c = 0; c < part.num_cells(); ++c) {
    const auto x = part.CellCenter(part.Unflatten(c));
    pts.insert(pts.end(), x.begin(), x.end());
    ys.push_back(p(x));
  }
  const SampleSet s(n, std::move(pts), std::move(ys));
  const FitReport rep = MedianRecover(s, cfg);
  const double err = SupNorm(Sub(rep.p_hat, p));
  const double secs = Seconds(t0);
  return {err <= 1e-6 && secs < 10.0,
          Fmt("m=%d cells=%zu sup-error=%.3g time=%.2fs", m, part.num_cells(), err, secs)};
}

struct RobustTally {
  int ok = 0;
  int trials = 0;
  int contraction_violations = 0;
  std::size_t cells_checked = 0;
  std::size_t closeness_violations = 0;
  int trials_with_closeness_violation = 0;
  double worst_error = 0.0;
  int alpha_good_trials = 0;
  int violating_alpha_good_trials = 0;
  double seconds = 0.0;
  std::size_t M = 0;
};

// Runs criterion 2 and records the invariants for criteria 3 and 4.
RobustTally RobustRuns() {
  const auto t0 = std::chrono::steady_clock::now();
  const double sigma = 0.1;
  const double rho = 0.2;
  const RecoveryConfig cfg = Config(3, 2, 0.5, 0.01, rho);
  const double eps_int = cfg.EpsInternal();
  RobustTally tally;
  tally.M = ChebyshevSampleCount(PlainGridSize(cfg), 2, rho, kDelta);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const MultiPoly p = SeededPoly(2, 3, DeriveSeed(1001, t));
    const SampleSet s = ChebSamples(p, tally.M, sigma, rho, DeriveSeed(1002, t));
    const std::size_t closeness_before = tally.closeness_violations;
    const auto observer = [&](const IterationInfo& info) {
      const double before = SupNorm(Sub(p, *info.before));
      const double after = SupNorm(Sub(p, *info.after));
      if (after > (2 + eps_int) * sigma + eps_int * before + 1e-6) ++tally.contraction_violations;
      const auto& flags = info.samples->outlier_flags();
      for (std::size_t c = 0; c < info.groups->num_cells(); ++c) {
        const auto members = info.groups->members(c);
        if (members.empty()) continue;
        ++tally.cells_checked;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i : members) {
          if (flags[i]) continue;
          const auto x = info.samples->point(i);
          best = std::min(best, std::abs(p(x) - (*info.before)(x) - info.medians[c]));
        }
        if (best > sigma + 1e-12) ++tally.closeness_violations;
      }
    };
    const int contraction_before = tally.contraction_violations;
    const FitReport rep = MedianRecover(s, cfg, observer);
    const GoodnessReport good =
        AlphaGoodness(ChebPartition(rep.m, 2), s.points(), s.outlier_flags(), AlphaForRho(rho));
    if (good.alpha_good) {
      ++tally.alpha_good_trials;
      if (tally.contraction_violations > contraction_before ||
          tally.closeness_violations > closeness_before) {
        ++tally.violating_alpha_good_trials;
      }
    }
    const double err = SupNorm(Sub(rep.p_hat, p));
    tally.worst_error = std::max(tally.worst_error, err);
    if (err <= 3 * sigma + cfg.eta) ++tally.ok;
    if (tally.closeness_violations > closeness_before) ++tally.trials_with_closeness_violation;
    ++tally.trials;
  }
  tally.seconds = Seconds(t0);
  return tally;
}

// Criterion 5.
Verdict Sandwich() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(505);
  int fails = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int d = static_cast<int>(rng.Next() % 6);
    const int n = 1 + static_cast<int>(rng.Next() % 3);
    const MultiPoly p = RandomPoly(n, d, rng);
    const double bound = std::pow(2.0 * std::max(d, 1), 2.0 * n);
    const SandwichReport r = CheckSandwich(p);
    const double ratio = SupNorm(p) / L1Norm(p);
    worst = std::max(worst, ratio / bound);
    if (!(ratio <= bound * (1 + 1e-6)) || !r.pass) ++fails;
  }
  const double secs = Seconds(t0);
  return {fails == 0 && secs < 120.0,
          Fmt("200 polynomials, violations=%d, max ratio/bound=%.3g, time=%.1fs", fails, worst, secs)};
}

// Criterion 6.
Verdict Tightness() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int d : {3, 5, 7}) {
    const int m = (d - 1) / 2;
    for (int n : {1, 2}) {
      const double analytic = std::pow((m + 1) * (m + 2) / 2.0, n);
      const TightnessCase tc = TightnessFamily(d, n);
      const double ratio = SupNorm(tc.f) / L1Norm(tc.f);
      worst = std::max(worst, std::abs(ratio / analytic - 1));
    }
  }
  const double secs = Seconds(t0);
  return {worst <= 1e-5 && secs < 60.0, Fmt("max relative deviation=%.3g time=%.1fs", worst, secs)};
}

// Criterion 7; the cell of a point is located from the edge formula directly.
Verdict ChebyshevMass() {
  const int m = 5;
  const int n = 2;
  const std::size_t draws = 100000;
  const auto pts = DrawPoints(Distribution::kChebyshev, draws, n, 707);
  std::vector<std::size_t> count(static_cast<std::size_t>(m * m), 0);
  for (std::size_t i = 0; i < draws; ++i) {
    int flat = 0;
    for (int a = 0; a < n; ++a) {
      const double t = pts[i * n + static_cast<std::size_t>(a)];
      int j = 0;
      while (j + 1 < m && t >= std::cos(std::numbers::pi * (m - (j + 1)) / m)) ++j;
      flat = flat * m + j;
    }
    ++count[static_cast<std::size_t>(flat)];
  }
  const double p = 1.0 / (m * m);
  const double se = std::sqrt(p * (1 - p) / draws);
  double worst = 0.0;
  for (std::size_t c : count) worst = std::max(worst, std::abs(static_cast<double>(c) / draws - p) / se);
  return {worst <= 4.0, Fmt("max |freq - 1/25| = %.2f s.e.", worst)};
}

// Criterion 8.
Verdict PiecewiseDecay() {
  const int d = 3;
  const int n = 2;
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const MultiPoly p = SeededPoly(n, d, 800 + seed);
    const double sup = SupNorm(p);
    double prev = std::numeric_limits<double>::infinity();
    detail += Fmt("seed %d:", static_cast<int>(seed));
    for (int m = d * n; m <= 8 * d * n; m *= 2) {
      const double ratio = PiecewiseConstantError(p, ChebPartition(m, n)) / sup;
      if (!(ratio <= 0.75 * prev)) ok = false;
      prev = ratio;
      detail += Fmt(" %.3g", ratio);
    }
    detail += "; ";
  }
  return {ok, detail};
}

// Criterion 9. T_d'(1) = d^2 and |T_d| <= 1.
Verdict Markov() {
  double worst = 0.0;
  for (int d = 1; d <= 10; ++d) worst = std::max(worst, std::abs(MarkovRatio(d) / (d * d) - 1));
  Rng rng(909);
  int fails = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const int d = 1 + k % 5;
    const MultiPoly p = RandomPoly(n, d, rng);
    const GradientReport g = CheckGradientBound(p);
    if (!g.pass || g.max_gradient > 2.0 * d * d * SupNorm(p) * (1 + 1e-9)) ++fails;
  }
  return {worst <= 1e-6 && fails == 0,
          Fmt("Markov max relative deviation=%.3g, gradient violations=%d/100", worst, fails)};
}

// Criterion 10.
Verdict UniformLowerBound() {
  const int d = 4;
  const int n = 2;
  const double C = 1.5;
  const double alpha = 4 * std::sqrt(C);
  const auto bound = static_cast<std::size_t>(std::floor(std::pow(2.0 * d * d / alpha, n) / 3.0));
  if (AvoidanceSampleBound(d, n, C) != bound) return {false, "avoidance bound mismatch"};
  const AdversaryPair pair = BuildUniformAdversary(d, n, C);
  const IndistinguishabilityResult r =
      RunIndistinguishabilityExperiment(pair, bound - 1, 500, 1010, DefaultEstimator(d, n));
  const bool avoid_ok = r.avoided.rate >= 2.0 / 3.0 - 4 * r.avoided.std_error;
  const bool fail_ok = r.failure.rate >= 0.25;
  return {avoid_ok && fail_ok,
          Fmt("M=%zu avoided=%.3f (se %.3f) failure=%.3f", bound - 1, r.avoided.rate,
              r.avoided.std_error, r.failure.rate)};
}

// Criterion 11.
Verdict LinearLowerBound() {
  const LinearLbResult r = RunLinearLbExperiment(200, 0.2, 2.0, 20, 500, 1111);
  const double h = 1 - 20 * std::exp(-200 * 0.2 * 0.2 / 2);
  const bool ok = r.all_bad.rate >= h - 4 * r.all_bad.std_error;
  return {ok, Fmt("all-bad=%.3f (se %.3f), Hoeffding bound=%.4f", r.all_bad.rate,
                  r.all_bad.std_error, h)};
}

// Criterion 12.
Verdict LpOracle() {
  Rng rng(1212);
  double worst = 0.0;
  int bad = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t rows = 2 + rng.Next() % 7;
    const std::size_t cols = 2 + rng.Next() % 9;
    std::vector<std::vector<double>> A(rows, std::vector<double>(cols));
    for (auto& row : A) {
      for (double& v : row) v = rng.Uniform(0.05, 1.0);
    }
    std::vector<double> b(rows);
    for (double& v : b) v = rng.Uniform(1.0, 2.0);
    std::vector<double> c(cols);
    for (double& v : c) v = rng.Uniform(-1.0, 0.5);
    LinearProgram lp;
    lp.objective = c;
    for (std::size_t i = 0; i < rows; ++i) lp.constraints.push_back({A[i], Relation::kLessEqual, b[i]});
    const LpSolution got = Solve(lp);
    const auto want = oracle::TableauSimplex(A, b, c);
    if (got.status != LpStatus::kOptimal || !want) {
      ++bad;
      continue;
    }
    worst = std::max(worst, std::abs(got.objective - *want));
  }
  double fit_worst = 0.0;
  for (int d = 0; d <= 10; ++d) {
    const MultiPoly p = SeededPoly(1, d, 1300 + d);
    std::vector<double> x;
    std::vector<double> y;
    for (int k = 0; k <= d; ++k) {
      x.push_back(std::cos(std::numbers::pi * (k + 0.5) / (d + 1)));
      y.push_back(p(std::vector<double>{x.back()}));
    }
    fit_worst = std::max(fit_worst, LinfFit(x, 1, y, d).objective);
  }
  return {bad == 0 && worst <= 1e-6 && fit_worst <= 1e-8,
          Fmt("50 LPs: failures=%d max |obj diff|=%.3g; node fits max objective=%.3g", bad, worst,
              fit_worst)};
}

// Criterion 13.
Verdict FinitePrecision() {
  const auto t0 = std::chrono::steady_clock::now();
  const int bits = 30;
  const double sigma = std::ldexp(1.0, -8);
  const double rho = 0.2;
  RecoveryConfig cfg = Config(3, 2, 0.5, 0.01, rho);
  cfg.variant = Variant::kFinitePrecision;
  cfg.precision_bits = bits;
  cfg.sigma = sigma;
  const std::size_t M = ChebyshevSampleCount(PlainGridSize(cfg), 2, rho, kDelta);
  int ok = 0;
  std::size_t unstable = 0;
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const MultiPoly p = SeededPoly(2, 3, DeriveSeed(1301, t));
    const SampleSet s = ChebSamples(p, M, sigma, rho, DeriveSeed(1302, t));
    const FitReport rep = FinitePrecisionRecover(s, cfg);
    unstable += rep.unstable_survivors;
    const double err = SupNorm(Sub(rep.p_hat, p));
    worst = std::max(worst, err);
    if (err <= 3 * sigma) ++ok;
    if (t == 0) {
      // Independent stability check of the sifted set.
      const ChebPartition part(rep.m, 2);
      const SiftResult sr = SiftFinitePrecision(s, part, bits);
      const SampleSet rounded = RoundBits(sr.kept, bits);
      for (std::size_t i = 0; i < sr.kept.size(); ++i) {
        if (part.FlatCellOf(sr.kept.point(i)) != part.FlatCellOf(rounded.point(i))) ++unstable;
      }
    }
  }
  return {ok >= 18 && unstable == 0,
          Fmt("M=%zu sigma=2^-8: %d/20 within 3 sigma (worst %.3g), unstable survivors=%zu, time=%.1fs",
              M, ok, worst, unstable, Seconds(t0))};
}

int failures = 0;

void Report(int id, const std::function<Verdict()>& run) {
  Verdict v;
  try {
    v = run();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::printf("%s criterion %d: %s\n", v.pass ? "PASS" : "FAIL", id, v.detail.c_str());
  std::fflush(stdout);
}

}  // namespace
}  // namespace robpoly

int main() {
  using namespace robpoly;
  Report(1, ExactRecovery);
  RobustTally robust;
  bool robust_ran = true;
  std::string robust_error;
  try {
    robust = RobustRuns();
  } catch (const std::exception& e) {
    robust_ran = false;
    robust_error = e.what();
  }
  Report(2, [&]() -> Verdict {
    if (!robust_ran) return {false, "exception: " + robust_error};
    return {robust.ok >= 18 && robust.seconds < 300.0,
            Fmt("M=%zu: %d/%d within 3 sigma + eta (worst %.3g), time=%.1fs", robust.M, robust.ok,
                robust.trials, robust.worst_error, robust.seconds)};
  });
  Report(3, [&]() -> Verdict {
    if (!robust_ran) return {false, "exception: " + robust_error};
    return {robust.contraction_violations == 0,
            Fmt("contraction violations=%d; alpha-good partitions in %d/%d trials, %d of them with "
                "a violation",
                robust.contraction_violations, robust.alpha_good_trials, robust.trials,
                robust.violating_alpha_good_trials)};
  });
  Report(4, [&]() -> Verdict {
    if (!robust_ran) return {false, "exception: " + robust_error};
    return {robust.closeness_violations == 0,
            Fmt("cells checked=%zu, far medians=%zu in %d/%d trials", robust.cells_checked,
                robust.closeness_violations, robust.trials_with_closeness_violation, robust.trials)};
  });
  Report(5, Sandwich);
  Report(6, Tightness);
  Report(7, ChebyshevMass);
  Report(8, PiecewiseDecay);
  Report(9, Markov);
  Report(10, UniformLowerBound);
  Report(11, LinearLowerBound);
  Report(12, LpOracle);
  Report(13, FinitePrecision);
  return failures == 0 ? 0 : 1;
}
