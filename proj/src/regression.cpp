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

#include "robpoly/regression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "robpoly/error.hpp"
#include "robpoly/lp.hpp"

namespace robpoly {

const char* ToString(Variant v) {
  switch (v) {
    case Variant::kPlain: return "plain";
    case Variant::kWithL1: return "l1";
    case Variant::kFinitePrecision: return "fp";
  }
  return "unknown";
}

Variant ParseVariant(const std::string& s) {
  if (s == "plain") return Variant::kPlain;
  if (s == "l1" || s == "with_l1") return Variant::kWithL1;
  if (s == "fp" || s == "finite_precision") return Variant::kFinitePrecision;
  Fail(ErrorCode::kInvalidArgument, "unknown variant '" + s + "' (expected plain, l1 or fp)");
}

void RecoveryConfig::Validate() const {
  Require(d >= 0, "config: degree d must be >= 0");
  Require(n >= 1, "config: dimension n must be >= 1");
  Require(eps > 0.0 && eps <= 0.5, "config: eps must lie in (0, 0.5]");
  Require(rho >= 0.0 && rho < 0.5, "config: rho must lie in [0, 0.5)");
  Require(c_grid > 0.0 && std::isfinite(c_grid), "config: c_grid must be positive");
  Require(max_iters >= 1, "config: max_iters must be >= 1");
  Require(l1_cell_budget >= 1.0, "config: l1_cell_budget must be >= 1");
  if (m_override) Require(*m_override >= 1, "config: m must be >= 1");
  if (sigma) Require(*sigma >= 0.0 && std::isfinite(*sigma), "config: sigma must be >= 0");
  if (variant == Variant::kPlain) {
    Require(eta > 0.0 && std::isfinite(eta), "config: eta must be > 0");
  }
  if (variant == Variant::kFinitePrecision) {
    Require(precision_bits >= 1 && precision_bits <= 52,
            "config: precision bits must lie in [1, 52]");
  }
}

double RecoveryConfig::EpsInternal() const {
  return variant == Variant::kWithL1 ? eps / 10.0 : eps / 7.0;
}

int PlainGridSize(const RecoveryConfig& cfg) {
  const double raw = cfg.c_grid * std::max(cfg.d, 1) * cfg.n / cfg.EpsInternal();
  return std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
}

double L1GridSize(const RecoveryConfig& cfg) {
  const double base = cfg.c_grid * std::max(cfg.d, 1);
  return std::ceil(std::pow(base, 2.0 * cfg.n + 1.0) / cfg.EpsInternal() - 1e-9);
}

std::size_t ChebyshevSampleCount(int m, int n, double rho, double delta) {
  Require(m >= 1 && n >= 1, "sample count: m and n must be positive");
  Require(rho >= 0.0 && rho < 0.5, "sample count: rho must lie in [0, 0.5)");
  Require(delta > 0.0 && delta < 1.0, "sample count: delta must lie in (0, 1)");
  const double cells = std::pow(static_cast<double>(m), n);
  const double factor = 1.0 / ((1.0 - 2.0 * rho) * (1.0 - 2.0 * rho));
  return static_cast<std::size_t>(std::ceil(factor * cells * std::log(cells / delta)));
}

int PlainIterationCount(double eps_int, double v, double eta) {
  Require(eps_int > 0.0 && eps_int < 1.0, "iteration count: eps must lie in (0, 1)");
  Require(eta > 0.0, "iteration count: eta must be > 0");
  const double ratio = (5.0 + 2.0 * v) / eta;
  const double logs = std::log(ratio) / std::log(1.0 / eps_int);
  return static_cast<int>(std::ceil(std::max(0.0, logs) - 1e-12)) + 1;
}

int L1IterationCount(double eps_int, int d, int n, double rho) {
  Require(eps_int > 0.0 && eps_int < 1.0, "iteration count: eps must lie in (0, 1)");
  const double alpha = AlphaForRho(rho);
  const double base = std::log(1.0 / eps_int);
  const double a = 2.0 * n * std::log(2.0 * std::numbers::sqrt2 * std::max(d, 1)) / base;
  const double b = std::log(1.0 / (1.0 - 2.0 * alpha)) / base;
  return std::max(1, static_cast<int>(std::ceil(a + b - 1e-12)));
}

CellGroups::CellGroups(const ChebPartition& part, const SampleSet& s) {
  Require(part.dim() == s.dim(), "partition and samples differ in dimension",
          ErrorCode::kDimensionMismatch);
  const std::size_t cells = part.num_cells();
  cell_of_.resize(s.size());
  offsets_.assign(cells + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    cell_of_[i] = part.FlatCellOf(s.point(i));
    ++offsets_[cell_of_[i] + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) offsets_[c + 1] += offsets_[c];
  order_.resize(s.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) order_[fill[cell_of_[i]]++] = i;
}

RefineResult Refine(const SampleSet& s, const ChebPartition& part,
                    const MultiPoly& p_hat, bool strict) {
  const CellGroups groups(part, s);
  return Refine(s, part, groups, p_hat, strict);
}

RefineResult Refine(const SampleSet& s, const ChebPartition& part,
                    const CellGroups& groups, const MultiPoly& p_hat,
                    bool strict) {
  const int n = s.dim();
  Require(p_hat.dim() == n, "Refine: estimate has wrong dimension",
          ErrorCode::kDimensionMismatch);
  Require(groups.num_cells() == part.num_cells(), "Refine: cell groups do not match partition",
          ErrorCode::kDimensionMismatch);
  const std::size_t cells = part.num_cells();

  std::vector<double> residual(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) residual[i] = s.label(i) - p_hat(s.point(i));

  RefineResult out{p_hat, std::vector<double>(cells, std::numeric_limits<double>::quiet_NaN()), 0, 0};
  std::vector<double> centers;
  std::vector<double> values;
  std::vector<double> scratch;
  for (std::size_t c = 0; c < cells; ++c) {
    const auto members = groups.members(c);
    if (members.empty()) {
      if (strict) {
        Fail(ErrorCode::kInvalidArgument,
             "Refine: cell " + std::to_string(c) + " has no samples (strict mode)");
      }
      ++out.skipped;
      continue;
    }
    scratch.clear();
    for (std::size_t i : members) scratch.push_back(residual[i]);
    const std::size_t k = (scratch.size() - 1) / 2;  // lower median
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k), scratch.end());
    out.medians[c] = scratch[k];
    const auto center = part.CellCenter(part.Unflatten(c));
    centers.insert(centers.end(), center.begin(), center.end());
    values.push_back(scratch[k]);
  }
  Require(!values.empty(), "Refine: every cell is empty");
  const FitResult fit = LinfFit(centers, n, values, p_hat.degree());
  out.p_hat = p_hat + fit.poly;
  out.lp_iterations = fit.iterations;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double TruthError(const SampleSet& s, const MultiPoly& p_hat) {
  return SupNorm(Sub(*s.truth(), p_hat));
}

// Runs refine passes until `iterations` have been done (the first one may
// already be counted by the caller) or the V-dependent bound is met.
struct Driver {
  const SampleSet& s;
  const ChebPartition& part;
  const CellGroups& groups;
  const RecoveryConfig& cfg;
  const IterationObserver& observer;
  FitReport& report;

  MultiPoly Step(const MultiPoly& current) {
    RefineResult r = Refine(s, part, groups, current, cfg.strict);
    ++report.iterations;
    ++report.lp_solves;
    report.lp_iterations += r.lp_iterations;
    report.cells_skipped = std::max(report.cells_skipped, r.skipped);
    if (observer) {
      IterationInfo info;
      info.iteration = report.iterations;
      info.before = &current;
      info.after = &r.p_hat;
      info.partition = &part;
      info.groups = &groups;
      info.samples = &s;
      info.medians = r.medians;
      observer(info);
    }
    if (s.truth()) report.errors.push_back(TruthError(s, r.p_hat));
    return std::move(r.p_hat);
  }
};

void NoteSkipped(FitReport& report) {
  if (report.cells_skipped > 0) {
    report.warnings.push_back(std::to_string(report.cells_skipped) +
                              " empty cells skipped in refine");
  }
}

int CapIterations(int wanted, const RecoveryConfig& cfg, FitReport& report) {
  report.iteration_bound = wanted;
  if (wanted > cfg.max_iters) {
    report.cap_hit = true;
    report.warnings.push_back("iteration count " + std::to_string(wanted) +
                              " capped at max_iters=" + std::to_string(cfg.max_iters));
    return cfg.max_iters;
  }
  return wanted;
}

FitReport RunPlain(const SampleSet& s, const RecoveryConfig& cfg, double eta,
                   const IterationObserver& observer) {
  const auto start = Clock::now();
  FitReport report;
  report.variant = cfg.variant;
  report.m = cfg.m_override.value_or(PlainGridSize(cfg));
  report.samples_used = s.size();
  Require(s.size() > 0, "recovery: sample set is empty");
  const ChebPartition part(report.m, cfg.n);
  const CellGroups groups(part, s);
  Driver drv{s, part, groups, cfg, observer, report};

  MultiPoly p_hat(cfg.n, cfg.d);
  if (s.truth()) report.errors.push_back(TruthError(s, p_hat));
  p_hat = drv.Step(p_hat);
  const double v = CoeffAbsSum(p_hat);
  const int total = CapIterations(PlainIterationCount(cfg.EpsInternal(), v, eta), cfg, report);
  while (report.iterations < total) p_hat = drv.Step(p_hat);
  NoteSkipped(report);
  report.p_hat = std::move(p_hat);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

void CheckSamples(const SampleSet& s, const RecoveryConfig& cfg) {
  cfg.Validate();
  Require(s.dim() == cfg.n, "samples have dimension " + std::to_string(s.dim()) +
                                ", config expects " + std::to_string(cfg.n),
          ErrorCode::kDimensionMismatch);
}

}  // namespace

FitReport MedianRecover(const SampleSet& s, const RecoveryConfig& cfg,
                        const IterationObserver& observer) {
  CheckSamples(s, cfg);
  Require(cfg.variant == Variant::kPlain, "MedianRecover: config variant must be plain");
  return RunPlain(s, cfg, cfg.eta, observer);
}

FitReport MedianRecoverWithL1(const SampleSet& s, const RecoveryConfig& cfg,
                              const IterationObserver& observer) {
  CheckSamples(s, cfg);
  Require(cfg.variant == Variant::kWithL1, "MedianRecoverWithL1: config variant must be l1");
  Require(s.size() > 0, "recovery: sample set is empty");
  const auto start = Clock::now();
  FitReport report;
  report.variant = cfg.variant;
  report.samples_used = s.size();

  const double wanted = L1GridSize(cfg);
  if (std::pow(wanted, cfg.n) <= cfg.l1_cell_budget) {
    report.m = static_cast<int>(wanted);
    if (cfg.m_override && *cfg.m_override != report.m) {
      report.warnings.push_back("m override ignored: l1 grid size " + std::to_string(report.m) +
                                " fits the cell budget");
    }
  } else if (cfg.m_override) {
    report.m = *cfg.m_override;
    report.warnings.push_back("l1 grid size exceeds cell budget; using m override " +
                              std::to_string(report.m));
  } else {
    report.m = PlainGridSize(cfg);
    report.warnings.push_back("l1 grid size exceeds cell budget; using plain grid size " +
                              std::to_string(report.m));
  }
  const ChebPartition part(report.m, cfg.n);
  const CellGroups groups(part, s);

  std::vector<WeightedCell> cells;
  cells.reserve(part.num_cells());
  for (std::size_t c = 0; c < part.num_cells(); ++c) {
    const auto members = groups.members(c);
    const CellIndex j = part.Unflatten(c);
    if (members.empty()) {
      std::string name;
      for (int v : j) name += (name.empty() ? "" : ",") + std::to_string(v);
      Fail(ErrorCode::kInvalidArgument,
           "l1 stage: cell (" + name + ") has no samples; the l1 minimizer needs every cell");
    }
    WeightedCell wc;
    for (std::size_t i : members) {
      const auto x = s.point(i);
      wc.points.insert(wc.points.end(), x.begin(), x.end());
      wc.labels.push_back(s.label(i));
    }
    wc.weight = part.CellBox(j).Volume() / static_cast<double>(members.size());
    cells.push_back(std::move(wc));
  }
  const FitResult l1 = WeightedL1Fit(cells, cfg.n, cfg.d);
  ++report.lp_solves;
  report.lp_iterations += l1.iterations;
  cells.clear();
  cells.shrink_to_fit();

  MultiPoly p_hat = l1.poly;
  if (s.truth()) report.errors.push_back(TruthError(s, p_hat));
  const int total = CapIterations(L1IterationCount(cfg.EpsInternal(), cfg.d, cfg.n, cfg.rho), cfg, report);
  Driver drv{s, part, groups, cfg, observer, report};
  while (report.iterations < total) p_hat = drv.Step(p_hat);
  NoteSkipped(report);
  report.p_hat = std::move(p_hat);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SiftResult SiftFinitePrecision(const SampleSet& s, const ChebPartition& part,
                               int bits) {
  Require(bits >= 1, "sift: bits must be >= 1");
  Require(part.dim() == s.dim(), "sift: partition and samples differ in dimension",
          ErrorCode::kDimensionMismatch);
  const double tol = std::ldexp(1.0, -bits);
  for (int j = 1; j <= part.m(); ++j) {
    if (!(part.width(j) > 4.0 * tol)) {
      Fail(ErrorCode::kInvalidArgument,
           "sift: cell " + std::to_string(j) + " has width " + std::to_string(part.width(j)) +
               ", need more than 4*2^-" + std::to_string(bits) + " (m too large for N)");
    }
  }
  std::vector<bool> keep(s.size(), true);
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (double t : s.point(i)) {
      if (part.DistanceToNearestEdge(t) <= tol) {
        keep[i] = false;
        ++dropped;
        break;
      }
    }
  }
  return SiftResult{s.Subset(keep), dropped};
}

FitReport FinitePrecisionRecover(const SampleSet& s, const RecoveryConfig& cfg,
                                 const IterationObserver& observer) {
  CheckSamples(s, cfg);
  Require(cfg.variant == Variant::kFinitePrecision,
          "FinitePrecisionRecover: config variant must be fp");
  const int bits = cfg.precision_bits;
  const double unit = std::ldexp(1.0, -bits);
  if (cfg.sigma) {
    Require(*cfg.sigma >= unit, "finite precision: sigma " + std::to_string(*cfg.sigma) +
                                    " is below 2^-" + std::to_string(bits));
  }
  const double c0 = 6.0 * cfg.c_grid / std::numbers::pi;
  const double eps_min = c0 * std::max(cfg.d, 1) * cfg.n * std::pow(2.0, -0.5 * bits);
  Require(cfg.eps >= eps_min, "finite precision: eps " + std::to_string(cfg.eps) +
                                  " is below c0*d*n*2^(-N/2) = " + std::to_string(eps_min));

  const int m = cfg.m_override.value_or(PlainGridSize(cfg));
  const ChebPartition part(m, cfg.n);
  const SampleSet rounded = RoundBits(s, bits);
  SiftResult sifted = SiftFinitePrecision(rounded, part, bits);

  // Survivors must land in the same cell with or without rounding.
  std::size_t unstable = 0;
  {
    std::size_t k = 0;
    for (std::size_t i = 0; i < rounded.size(); ++i) {
      bool kept = true;
      for (double t : rounded.point(i)) {
        if (part.DistanceToNearestEdge(t) <= unit) {
          kept = false;
          break;
        }
      }
      if (!kept) continue;
      if (part.FlatCellOf(s.point(i)) != part.FlatCellOf(sifted.kept.point(k))) ++unstable;
      ++k;
    }
  }

  RecoveryConfig inner = cfg;
  inner.variant = Variant::kPlain;
  inner.m_override = m;
  inner.eta = cfg.eps * unit;
  FitReport report = RunPlain(sifted.kept, inner, inner.eta, observer);
  report.variant = Variant::kFinitePrecision;
  report.samples_dropped = sifted.dropped;
  report.unstable_survivors = unstable;
  if (unstable > 0) {
    report.warnings.push_back(std::to_string(unstable) + " sifted samples changed cell under rounding");
  }
  return report;
}

FitReport Recover(const SampleSet& s, const RecoveryConfig& cfg,
                  const IterationObserver& observer) {
  switch (cfg.variant) {
    case Variant::kPlain: return MedianRecover(s, cfg, observer);
    case Variant::kWithL1: return MedianRecoverWithL1(s, cfg, observer);
    case Variant::kFinitePrecision: return FinitePrecisionRecover(s, cfg, observer);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown variant");
}

double PiecewiseConstantError(const MultiPoly& p, const ChebPartition& part,
                              int per_cell) {
  Require(per_cell >= 2, "PiecewiseConstantError: per_cell must be >= 2");
  Require(p.dim() == part.dim(), "PiecewiseConstantError: dimension mismatch",
          ErrorCode::kDimensionMismatch);
  const int n = p.dim();
  const int m = part.m();
  const std::size_t stride = static_cast<std::size_t>(per_cell) + 1;  // samples + center
  const auto edges = part.edges();
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(m) * stride);
  for (int e = 0; e < m; ++e) {
    const double lo = edges[static_cast<std::size_t>(e)];
    const double hi = edges[static_cast<std::size_t>(e) + 1];
    for (int k = 0; k < per_cell; ++k) axis.push_back(lo + (hi - lo) * k / (per_cell - 1));
    axis.push_back(0.5 * (lo + hi));
  }
  const std::vector<std::vector<double>> grid(static_cast<std::size_t>(n), axis);
  const std::vector<double> values = p.EvaluateGrid(grid);

  const std::size_t len = axis.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  double worst = 0.0;
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t rest = flat;
    for (int i = n - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = rest % len;
      rest /= len;
    }
    std::size_t center_flat = 0;
    for (int i = 0; i < n; ++i) {
      const std::size_t cell = idx[static_cast<std::size_t>(i)] / stride;
      center_flat = center_flat * len + cell * stride + per_cell;
    }
    worst = std::max(worst, std::abs(values[flat] - values[center_flat]));
  }
  return worst;
}

}  // namespace robpoly
