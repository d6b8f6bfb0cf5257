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

#include "robpoly/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "robpoly/error.hpp"

namespace robpoly {

int RunConfig::RequireD() const {
  Require(d.has_value(), "config: degree is required");
  return *d;
}

int RunConfig::RequireN() const {
  Require(n.has_value(), "config: dim is required");
  return *n;
}

Distribution ParseDistribution(const std::string& s) {
  if (s == "uniform") return Distribution::kUniform;
  if (s == "chebyshev") return Distribution::kChebyshev;
  Fail(ErrorCode::kInvalidArgument, "unknown distribution '" + s + "' (expected uniform or chebyshev)");
}

const char* ToString(Distribution d) {
  return d == Distribution::kUniform ? "uniform" : "chebyshev";
}

namespace {

template <typename T>
T Get(const Json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const Json::exception&) {
    Fail(ErrorCode::kInvalidArgument, "config: key '" + key + "' has the wrong type");
  }
}

std::size_t GetCount(const Json& v, const std::string& key) {
  Require(v.is_number_integer() || v.is_number_unsigned(),
          "config: key '" + key + "' must be an integer");
  Require(v.get<long long>() >= 0, "config: key '" + key + "' must be >= 0");
  return v.get<std::size_t>();
}

int GetInt(const Json& v, const std::string& key) {
  Require(v.is_number_integer() || v.is_number_unsigned(),
          "config: key '" + key + "' must be an integer");
  return v.get<int>();
}

double GetReal(const Json& v, const std::string& key) {
  Require(v.is_number(), "config: key '" + key + "' must be a number");
  const double x = v.get<double>();
  Require(std::isfinite(x), "config: key '" + key + "' must be finite");
  return x;
}

}  // namespace

RunConfig ParseRunConfig(const Json& j) {
  Require(j.is_object(), "config must be a JSON object", ErrorCode::kParse);
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (v.is_null()) continue;
    if (key == "degree" || key == "d") {
      c.d = GetInt(v, key);
    } else if (key == "dim" || key == "n") {
      c.n = GetInt(v, key);
    } else if (key == "eps") {
      c.eps = GetReal(v, key);
    } else if (key == "eta") {
      c.eta = GetReal(v, key);
    } else if (key == "sigma") {
      c.sigma = GetReal(v, key);
    } else if (key == "rho") {
      c.rho = GetReal(v, key);
    } else if (key == "dist") {
      c.dist = ParseDistribution(Get<std::string>(v, key));
    } else if (key == "dists") {
      Require(v.is_array(), "config: 'dists' must be an array");
      c.dists.clear();
      for (const auto& e : v) c.dists.push_back(ParseDistribution(Get<std::string>(e, key)));
    } else if (key == "bits") {
      c.bits = GetInt(v, key);
    } else if (key == "variant") {
      c.variant = ParseVariant(Get<std::string>(v, key));
    } else if (key == "seed") {
      Require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
              "config: 'seed' must be a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "trials") {
      c.trials = GetInt(v, key);
    } else if (key == "m") {
      c.m = GetInt(v, key);
    } else if (key == "M" || key == "samples") {
      c.samples = GetCount(v, key);
    } else if (key == "Ms" || key == "sample_grid") {
      Require(v.is_array(), "config: '" + key + "' must be an array");
      c.sample_grid.clear();
      for (const auto& e : v) c.sample_grid.push_back(GetCount(e, key));
    } else if (key == "rhos" || key == "rho_grid") {
      Require(v.is_array(), "config: '" + key + "' must be an array");
      c.rho_grid.clear();
      for (const auto& e : v) c.rho_grid.push_back(GetReal(e, key));
    } else if (key == "delta") {
      c.delta = GetReal(v, key);
    } else if (key == "c_grid") {
      c.c_grid = GetReal(v, key);
    } else if (key == "max_iters") {
      c.max_iters = GetInt(v, key);
    } else if (key == "adversary") {
      c.adversary = Get<std::string>(v, key);
      Require(c.adversary == "const_blowup" || c.adversary == "sign_flip",
              "config: adversary must be const_blowup or sign_flip");
    } else if (key == "outlier_magnitude") {
      c.outlier_magnitude = GetReal(v, key);
    } else if (key == "flip_scale") {
      c.flip_scale = GetReal(v, key);
    } else if (key == "inlier_noise") {
      c.inlier_noise = Get<std::string>(v, key);
      Require(c.inlier_noise == "uniform" || c.inlier_noise == "alternating",
              "config: inlier_noise must be uniform or alternating");
    } else if (key == "strict") {
      c.strict = Get<bool>(v, key);
    } else if (key == "l1_cell_budget") {
      c.l1_cell_budget = GetReal(v, key);
    } else if (key == "C") {
      c.C = GetReal(v, key);
    } else if (key == "linear_n") {
      c.linear_n = GetInt(v, key);
    } else if (key == "linear_sigma") {
      c.linear_sigma = GetReal(v, key);
    } else if (key == "linear_C") {
      c.linear_C = GetReal(v, key);
    } else if (key == "linear_M") {
      c.linear_M = GetCount(v, key);
    } else if (key == "norm_polys") {
      c.norm_polys = GetInt(v, key);
    } else {
      Fail(ErrorCode::kInvalidArgument, "config: unknown key '" + key + "'");
    }
  }
  if (c.d) Require(*c.d >= 0, "config: degree must be >= 0");
  if (c.n) Require(*c.n >= 1, "config: dim must be >= 1");
  Require(c.sigma >= 0.0, "config: sigma must be >= 0");
  Require(c.trials >= 1, "config: trials must be >= 1");
  Require(c.bits >= 1 && c.bits <= 52, "config: bits must lie in [1, 52]");
  Require(c.delta > 0.0 && c.delta < 1.0, "config: delta must lie in (0, 1)");
  return c;
}

Json RunConfigToJson(const RunConfig& c) {
  Json j;
  j["degree"] = c.d ? Json(*c.d) : Json();
  j["dim"] = c.n ? Json(*c.n) : Json();
  j["eps"] = c.eps;
  j["eta"] = c.eta;
  j["sigma"] = c.sigma;
  j["rho"] = c.rho;
  j["dist"] = ToString(c.dist);
  Json dists = Json::array();
  for (Distribution d : c.dists) dists.push_back(ToString(d));
  j["dists"] = dists;
  j["bits"] = c.bits;
  j["variant"] = ToString(c.variant);
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["m"] = c.m ? Json(*c.m) : Json();
  j["M"] = c.samples ? Json(*c.samples) : Json();
  j["Ms"] = c.sample_grid;
  j["rhos"] = c.rho_grid;
  j["delta"] = c.delta;
  j["c_grid"] = c.c_grid;
  j["max_iters"] = c.max_iters;
  j["adversary"] = c.adversary;
  j["outlier_magnitude"] = c.outlier_magnitude ? Json(*c.outlier_magnitude) : Json();
  j["flip_scale"] = c.flip_scale;
  j["inlier_noise"] = c.inlier_noise;
  j["strict"] = c.strict;
  j["l1_cell_budget"] = c.l1_cell_budget;
  j["C"] = c.C;
  j["linear_n"] = c.linear_n;
  j["linear_sigma"] = c.linear_sigma;
  j["linear_C"] = c.linear_C;
  j["linear_M"] = c.linear_M;
  j["norm_polys"] = c.norm_polys;
  return j;
}

RecoveryConfig ToRecoveryConfig(const RunConfig& c) {
  RecoveryConfig r;
  r.d = c.RequireD();
  r.n = c.RequireN();
  r.eps = c.eps;
  r.eta = c.eta;
  r.rho = c.rho;
  r.m_override = c.m;
  r.c_grid = c.c_grid;
  r.max_iters = c.max_iters;
  r.variant = c.variant;
  r.precision_bits = c.bits;
  r.sigma = c.sigma;
  r.strict = c.strict;
  r.l1_cell_budget = c.l1_cell_budget;
  r.Validate();
  return r;
}

NoiseModel ToNoiseModel(const RunConfig& c) {
  NoiseModel m;
  m.sigma = c.sigma;
  m.rho = c.rho;
  if (c.adversary == "sign_flip") {
    m.adversary = SignFlipExtreme{c.flip_scale};
  } else {
    m.adversary = ConstBlowup{c.outlier_magnitude};
  }
  m.inlier_noise = c.inlier_noise == "alternating" ? InlierNoise::kAlternatingExtreme
                                                   : InlierNoise::kUniform;
  m.Validate();
  return m;
}

namespace {

int PlanGrid(const RunConfig& c) {
  const RecoveryConfig r = ToRecoveryConfig(c);
  if (r.m_override) return *r.m_override;
  if (r.variant == Variant::kWithL1) {
    const double m = L1GridSize(r);
    if (std::pow(m, r.n) <= r.l1_cell_budget) return static_cast<int>(m);
  }
  return PlainGridSize(r);
}

std::size_t SampleCountAt(const RunConfig& c, double rho) {
  if (c.samples) return *c.samples;
  return ChebyshevSampleCount(PlanGrid(c), c.RequireN(), rho, c.delta);
}

SampleSet SimulateWith(const RunConfig& c, const MultiPoly& truth, std::size_t M,
                       Distribution dist, double rho, std::uint64_t seed) {
  RunConfig local = c;
  local.rho = rho;
  const int n = c.RequireN();
  auto pts = DrawPoints(dist, M, n, DeriveSeed(seed, 1));
  return Label(std::move(pts), n, truth, ToNoiseModel(local), DeriveSeed(seed, 2));
}

}  // namespace

std::size_t PlannedSampleCount(const RunConfig& c) { return SampleCountAt(c, c.rho); }

SampleSet Simulate(const RunConfig& c, const std::optional<MultiPoly>& truth) {
  const int d = c.RequireD();
  const int n = c.RequireN();
  MultiPoly p(n, d);
  if (truth) {
    Require(truth->dim() == n, "simulate: truth polynomial has wrong dimension",
            ErrorCode::kDimensionMismatch);
    p = *truth;
  } else {
    Rng rng(DeriveSeed(c.seed, 0));
    p = RandomPoly(n, d, rng);
  }
  return SimulateWith(c, p, PlannedSampleCount(c), c.dist, c.rho, c.seed);
}

std::vector<SweepRow> RunSweep(const RunConfig& c) {
  const int d = c.RequireD();
  const int n = c.RequireN();
  const RecoveryConfig rc = ToRecoveryConfig(c);
  const std::vector<Distribution> dists = c.dists.empty() ? std::vector<Distribution>{c.dist} : c.dists;
  const std::vector<double> rhos = c.rho_grid.empty() ? std::vector<double>{c.rho} : c.rho_grid;
  const double threshold = (2.0 + c.eps) * c.sigma + c.eta;
  std::vector<SweepRow> rows;
  std::uint64_t cell = 0;
  for (Distribution dist : dists) {
    for (double rho : rhos) {
      std::vector<std::size_t> grid = c.sample_grid;
      if (grid.empty()) {
        const std::size_t full = SampleCountAt(c, rho);
        grid = {std::max<std::size_t>(1, full / 4), std::max<std::size_t>(1, full / 2), full};
      }
      for (std::size_t M : grid) {
        SweepRow row;
        row.M = M;
        row.dist = dist;
        row.rho = rho;
        row.seed = DeriveSeed(c.seed, cell++);
        RecoveryConfig trial_cfg = rc;
        trial_cfg.rho = rho;
        std::size_t ok = 0;
        double err_sum = 0.0;
        for (int t = 0; t < c.trials; ++t) {
          const std::uint64_t ts = DeriveSeed(row.seed, static_cast<std::uint64_t>(t));
          Rng rng(DeriveSeed(ts, 0));
          const MultiPoly p = RandomPoly(n, d, rng);
          const SampleSet s = SimulateWith(c, p, M, dist, rho, ts);
          const FitReport rep = Recover(s, trial_cfg);
          const double err = rep.errors.empty() ? SupNorm(Sub(rep.p_hat, p)) : rep.errors.back();
          err_sum += err;
          if (err <= threshold) ++ok;
        }
        row.success = Wilson(ok, static_cast<std::size_t>(c.trials));
        row.mean_error = err_sum / c.trials;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "M,distribution,rho,trials,success_rate,ci_low,ci_high,mean_error,seed\n";
  for (const SweepRow& r : rows) {
    os << r.M << ',' << ToString(r.dist) << ',' << FormatDouble(r.rho) << ',' << r.success.trials
       << ',' << FormatDouble(r.success.rate) << ',' << FormatDouble(r.success.ci_low) << ','
       << FormatDouble(r.success.ci_high) << ',' << FormatDouble(r.mean_error) << ',' << r.seed
       << '\n';
  }
  return os.str();
}

namespace {

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

NormsSuite RunNormsSuite(const RunConfig& c) {
  NormsSuite s;
  auto add = [&](std::string name, bool pass, std::string detail) {
    s.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  Rng rng(DeriveSeed(c.seed, 100));

  // Sandwich: fixed cases, tightness family, then random polynomials.
  s.sandwich.push_back(CheckSandwich(MultiPoly::Constant(2, 0, 1.0), "constant_1"));
  {
    std::vector<double> mono(4, 0.0);
    mono[3] = 1.0;
    const std::vector<UniPoly> f(2, UniPoly::Monomial(mono));
    s.sandwich.push_back(CheckSandwich(MultiPoly::TensorProduct(f), "h_n_d3_n2"));
  }
  for (int d : {3, 5, 7}) {
    for (int n : {1, 2}) {
      const TightnessCase t = TightnessFamily(d, n);
      SandwichReport r = CheckSandwich(t.f, "tightness_d" + std::to_string(d) + "_n" + std::to_string(n));
      s.tightness.emplace_back(t, r.ratio);
      s.sandwich.push_back(std::move(r));
    }
  }
  for (int k = 0; k < c.norm_polys; ++k) {
    const int d = 1 + static_cast<int>(rng.Next() % 5);
    const int n = 1 + static_cast<int>(rng.Next() % 3);
    s.sandwich.push_back(CheckSandwich(RandomPoly(n, d, rng), "random_" + std::to_string(k)));
  }
  {
    std::size_t fails = 0;
    double worst = 0.0;
    for (const auto& r : s.sandwich) {
      if (!r.pass) ++fails;
      worst = std::max(worst, r.ratio / r.bound);
    }
    add("sandwich", fails == 0,
        std::to_string(s.sandwich.size()) + " polynomials, max ratio/bound " + Fmt(worst));
    const double const_ratio = s.sandwich[0].ratio;
    add("sandwich_constant", std::abs(const_ratio - 0.25) < 1e-12, "ratio " + Fmt(const_ratio));
    const double h_ratio = s.sandwich[1].ratio;
    add("sandwich_h_n", std::abs(h_ratio - 4.0) < 1e-9, "ratio " + Fmt(h_ratio));
  }
  for (const auto& [t, ratio] : s.tightness) {
    const double rel = std::abs(ratio - t.analytic_ratio) / t.analytic_ratio;
    add("tightness_d" + std::to_string(t.d) + "_n" + std::to_string(t.n), rel <= 1e-5,
        "numeric " + Fmt(ratio) + " analytic " + Fmt(t.analytic_ratio));
  }
  for (int d = 1; d <= 8; ++d) {
    const double r = MarkovRatio(d);
    add("markov_T" + std::to_string(d), std::abs(r - d * d) <= 1e-6 * d * d,
        "ratio " + Fmt(r) + " vs " + std::to_string(d * d));
  }
  {
    std::size_t fails = 0;
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const int d = 1 + k % 5;
      const int n = 1 + (k / 5) % 3;
      const GradientReport g = CheckGradientBound(RandomPoly(n, d, rng));
      if (!g.pass) ++fails;
      worst = std::max(worst, g.max_gradient / g.bound);
    }
    add("gradient_bound", fails == 0, "100 polynomials, max |grad|/(2d^2|p|) " + Fmt(worst));
  }
  {
    std::size_t fails = 0;
    std::vector<UniPoly> gs;
    for (int d = 1; d <= 8; ++d) gs.push_back(ChebyshevT(d));
    gs.push_back(UniPoly::Monomial({1.0}));
    gs.push_back(UniPoly::Monomial({0.0, 1.0}));
    for (int k = 0; k < 20; ++k) {
      std::vector<double> cc(static_cast<std::size_t>(1 + k % 8));
      for (double& v : cc) v = rng.Uniform(-1.0, 1.0);
      gs.push_back(UniPoly::Chebyshev(cc));
    }
    for (const UniPoly& g : gs) {
      if (!CheckUnivariateWindow(g).holds) ++fails;
    }
    add("univariate_window", fails == 0, std::to_string(gs.size()) + " polynomials");
  }
  {
    const MultiPoly t4(1, 4, {0, 0, 0, 0, 1});
    const std::vector<double> y{1.0};
    const MeasureEstimate e = LargeValueRegion(t4, y, 100000, DeriveSeed(c.seed, 101));
    const double bound = LargeValueLowerBound(4, 1);
    add("large_value_T4", e.measure >= bound - 4.0 * e.std_error,
        "measure " + Fmt(e.measure) + " bound " + Fmt(bound));
    std::size_t fails = 0;
    for (int k = 0; k < 10; ++k) {
      const int d = 1 + k % 4;
      const int n = 1 + k % 2;
      const MultiPoly p = RandomPoly(n, d, rng);
      const SupNormResult top = SupNormWithArgmax(p);
      const MeasureEstimate r = LargeValueRegion(p, top.argmax, 100000, DeriveSeed(c.seed, 200 + k));
      if (r.measure < LargeValueLowerBound(d, n) - 4.0 * r.std_error) ++fails;
    }
    add("large_value_random", fails == 0, "10 polynomials at their argmax");
  }
  {
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
      for (int j = 0; j < k; ++j) {
        std::vector<double> mono(static_cast<std::size_t>(j) + 1, 0.0);
        mono.back() = 1.0;
        worst = std::max(worst, LegendreOrthogonalityResidual(UniPoly::Monomial(mono), k));
      }
    }
    add("legendre_orthogonality", worst <= 1e-9, "max residual " + Fmt(worst));
  }
  s.all_pass = std::all_of(s.checks.begin(), s.checks.end(), [](const CheckRow& r) { return r.pass; });
  return s;
}

std::string TightnessCsv(const NormsSuite& s) {
  std::ostringstream os;
  os << "d,n,ratio,analytic_ratio,bound\n";
  for (const auto& [t, ratio] : s.tightness) {
    os << t.d << ',' << t.n << ',' << FormatDouble(ratio) << ',' << FormatDouble(t.analytic_ratio)
       << ',' << FormatDouble(SandwichBound(t.d, t.n)) << '\n';
  }
  return os.str();
}

std::string ChecksTable(const std::vector<CheckRow>& rows) {
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << std::string(width - r.name.size() + 2, ' ')
       << r.detail << '\n';
  }
  return os.str();
}

LowerboundSuite RunLowerboundSuite(const RunConfig& c) {
  const int d = c.RequireD();
  const int n = c.RequireN();
  LowerboundSuite s;
  s.pair = BuildUniformAdversary(d, n, c.C, 10000, DeriveSeed(c.seed, 0));
  const std::size_t bound = AvoidanceSampleBound(d, n, c.C);
  s.avoidance_M = bound > 0 ? bound - 1 : 0;
  std::vector<std::size_t> grid = c.sample_grid;
  if (grid.empty()) {
    const std::size_t b = std::max<std::size_t>(1, s.avoidance_M);
    grid = {0, b / 2, b, 4 * b, 16 * b};
  }
  s.rows = RunIndistinguishabilitySweep(s.pair, grid, static_cast<std::size_t>(c.trials),
                                        DeriveSeed(c.seed, 1));
  s.linear = RunLinearLbExperiment(c.linear_n, c.linear_sigma, c.linear_C, c.linear_M,
                                   static_cast<std::size_t>(c.trials), DeriveSeed(c.seed, 2));
  return s;
}

Json LowerboundToJson(const LowerboundSuite& s) {
  Json j;
  j["adversary"] = {{"alpha", s.pair.alpha},
                    {"C", s.pair.C},
                    {"corner_gap", s.pair.corner_gap},
                    {"outside_max", s.pair.outside_max},
                    {"region_lo", s.pair.distinguishable_region.lo},
                    {"region_probability", RegionProbability(s.pair)},
                    {"f", PolyToJson(s.pair.f)}};
  j["avoidance_M"] = s.avoidance_M;
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"M", r.M},
                    {"failure_rate", r.failure.rate},
                    {"ci_low", r.failure.ci_low},
                    {"ci_high", r.failure.ci_high},
                    {"avoid_rate", r.avoided.rate}});
  }
  j["indistinguishability"] = rows;
  j["linear"] = {{"n", s.linear.n},
                 {"sigma", s.linear.sigma},
                 {"M", s.linear.M},
                 {"all_bad_rate", s.linear.all_bad.rate},
                 {"ci_low", s.linear.all_bad.ci_low},
                 {"ci_high", s.linear.all_bad.ci_high},
                 {"hoeffding_bound", s.linear.hoeffding_bound}};
  return j;
}

}  // namespace robpoly
