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

// robpoly command-line tool. Talks to the library only through robpoly.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "robpoly/robpoly.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitInput = 2;

// Thrown to unwind with a C API status.
struct ApiFailure {
  robpoly_status status;
  std::string message;
};

struct InputFailure {
  std::string message;
};

void Check(robpoly_status st) {
  if (st != ROBPOLY_OK) throw ApiFailure{st, robpoly_last_error()};
}

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  robpoly_string_free(s);
  return out;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{"cannot open '" + path + "' for reading"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ApiFailure{ROBPOLY_ERR_IO, "cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw ApiFailure{ROBPOLY_ERR_IO, "write to '" + path + "' failed"};
}

struct Handle {
  robpoly_poly* poly = nullptr;
  robpoly_samples* samples = nullptr;
  robpoly_report* report = nullptr;
  ~Handle() {
    robpoly_poly_free(poly);
    robpoly_samples_free(samples);
    robpoly_report_free(report);
  }
};

// Flags shared by every subcommand; unset flags leave the config file alone.
struct CommonFlags {
  std::string config_path;
  std::optional<int> degree, dim, bits, trials, m;
  std::optional<double> eps, eta, sigma, rho;
  std::optional<std::string> dist, variant;
  std::optional<unsigned long long> seed;
  std::optional<std::size_t> samples;
  std::string out;

  void Attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON file with run parameters")->check(CLI::ExistingFile);
    app->add_option("--degree,-d", degree, "individual degree d");
    app->add_option("--dim,-n", dim, "dimension n");
    app->add_option("--eps", eps, "accuracy parameter in (0, 0.5]");
    app->add_option("--eta", eta, "additive accuracy");
    app->add_option("--sigma", sigma, "inlier noise bound");
    app->add_option("--rho", rho, "outlier probability in [0, 0.5)");
    app->add_option("--dist", dist, "uniform or chebyshev")
        ->check(CLI::IsMember({"uniform", "chebyshev"}));
    app->add_option("--bits", bits, "precision bits N");
    app->add_option("--variant", variant, "plain, l1 or fp")->check(CLI::IsMember({"plain", "l1", "fp"}));
    app->add_option("--seed", seed, "root seed");
    app->add_option("--trials", trials, "Monte-Carlo trials");
    app->add_option("--m", m, "grid size override");
    app->add_option("--samples,-M", samples, "sample count");
    app->add_option("--out,-o", out, "output path (stdout when omitted)");
  }

  Json Build() const {
    Json j = Json::object();
    if (!config_path.empty()) {
      try {
        j = Json::parse(ReadText(config_path));
      } catch (const Json::parse_error& e) {
        throw InputFailure{"config '" + config_path + "': " + e.what()};
      }
      if (!j.is_object()) throw InputFailure{"config '" + config_path + "' must hold a JSON object"};
    }
    if (degree) j["degree"] = *degree;
    if (dim) j["dim"] = *dim;
    if (eps) j["eps"] = *eps;
    if (eta) j["eta"] = *eta;
    if (sigma) j["sigma"] = *sigma;
    if (rho) j["rho"] = *rho;
    if (dist) j["dist"] = *dist;
    if (bits) j["bits"] = *bits;
    if (variant) j["variant"] = *variant;
    if (seed) j["seed"] = *seed;
    if (trials) j["trials"] = *trials;
    if (m) j["m"] = *m;
    if (samples) j["M"] = *samples;
    return j;
  }
};

robpoly_poly* LoadPoly(const std::string& path) {
  robpoly_poly* p = nullptr;
  Check(robpoly_poly_from_json(ReadText(path).c_str(), &p));
  return p;
}

int CmdFit(const CommonFlags& f, const std::string& input, const std::string& truth,
           const std::string& poly_out, const std::string& trace_out) {
  const std::string cfg = f.Build().dump();
  Handle h;
  Check(robpoly_samples_read_csv(input.c_str(), &h.samples));
  if (!truth.empty()) {
    h.poly = LoadPoly(truth);
    Check(robpoly_samples_set_truth(h.samples, h.poly));
  }
  Check(robpoly_fit(h.samples, cfg.c_str(), &h.report));
  char* s = nullptr;
  Check(robpoly_report_to_json(h.report, &s));
  WriteText(f.out, TakeString(s) + "\n");
  if (!poly_out.empty()) {
    robpoly_poly* p = nullptr;
    Check(robpoly_report_poly(h.report, &p));
    char* js = nullptr;
    const robpoly_status st = robpoly_poly_to_json(p, &js);
    robpoly_poly_free(p);
    Check(st);
    WriteText(poly_out, TakeString(js) + "\n");
  }
  if (!trace_out.empty()) {
    Check(robpoly_report_trace_csv(h.report, &s));
    WriteText(trace_out, TakeString(s));
  }
  return kExitOk;
}

int CmdSimulate(const CommonFlags& f, const std::string& truth, const std::string& truth_out) {
  const std::string cfg = f.Build().dump();
  Handle h;
  if (!truth.empty()) h.poly = LoadPoly(truth);
  Check(robpoly_simulate(cfg.c_str(), h.poly, &h.samples));
  char* s = nullptr;
  Check(robpoly_samples_to_csv(h.samples, &s));
  char* norm = nullptr;
  Check(robpoly_config_normalize(cfg.c_str(), &norm));
  WriteText(f.out, TakeString(s) + "# config=" + TakeString(norm) + "\n");
  if (!truth_out.empty()) {
    robpoly_poly* p = nullptr;
    Check(robpoly_samples_truth(h.samples, &p));
    char* js = nullptr;
    const robpoly_status st = robpoly_poly_to_json(p, &js);
    robpoly_poly_free(p);
    Check(st);
    WriteText(truth_out, TakeString(js) + "\n");
  }
  return kExitOk;
}

int CmdSweep(const CommonFlags& f, const std::vector<std::size_t>& Ms,
             const std::vector<double>& rhos, const std::vector<std::string>& dists) {
  Json j = f.Build();
  if (!Ms.empty()) j["Ms"] = Ms;
  if (!rhos.empty()) j["rhos"] = rhos;
  if (!dists.empty()) j["dists"] = dists;
  char* s = nullptr;
  Check(robpoly_sweep(j.dump().c_str(), &s));
  WriteText(f.out, TakeString(s));
  return kExitOk;
}

int CmdVerifyNorms(const CommonFlags& f) {
  const std::string cfg = f.Build().dump();
  char* s = nullptr;
  int all_pass = 0;
  Check(robpoly_verify_norms(cfg.c_str(), &s, &all_pass));
  const Json res = Json::parse(TakeString(s));
  std::cout << res["table"].get<std::string>();
  std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  if (!f.out.empty() && f.out != "-") {
    WriteText(f.out + ".json", res.dump(2) + "\n");
    WriteText(f.out + ".sandwich.csv", res["sandwich_csv"].get<std::string>());
    WriteText(f.out + ".tightness.csv", res["tightness_csv"].get<std::string>());
  }
  return all_pass ? kExitOk : kExitNumerical;
}

int CmdLowerbound(const CommonFlags& f, const std::vector<std::size_t>& Ms,
                  std::optional<double> C, const std::string& json_out) {
  Json j = f.Build();
  if (!Ms.empty()) j["Ms"] = Ms;
  if (C) j["C"] = *C;
  char* s = nullptr;
  Check(robpoly_lowerbound(j.dump().c_str(), &s));
  const Json res = Json::parse(TakeString(s));
  WriteText(f.out, res["csv"].get<std::string>());
  if (!json_out.empty()) WriteText(json_out, res.dump(2) + "\n");
  const Json& lin = res["linear"];
  std::cerr << "avoidance M=" << res["avoidance_M"] << ", linear all-bad rate "
            << lin["all_bad_rate"] << " (bound " << lin["hoeffding_bound"] << ")\n";
  return kExitOk;
}

void ReportError(const std::string& status, const std::string& message) {
  const Json e = {{"error", {{"status", status}, {"message", message}}}};
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust polynomial regression under random outliers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(robpoly_version()));

  CommonFlags fit_f, sim_f, sweep_f, norms_f, lb_f;
  std::string fit_input, fit_truth, fit_poly_out, fit_trace_out;
  auto* fit = app.add_subcommand("fit", "recover a polynomial from a sample CSV");
  fit_f.Attach(fit);
  fit->add_option("--input,-i", fit_input, "sample CSV")->required();
  fit->add_option("--truth", fit_truth, "ground-truth polynomial JSON for error traces");
  fit->add_option("--poly-out", fit_poly_out, "write the recovered polynomial JSON here");
  fit->add_option("--trace-out", fit_trace_out, "write the per-iteration error CSV here");

  std::string sim_truth, sim_truth_out;
  auto* sim = app.add_subcommand("simulate", "draw a labelled sample set");
  sim_f.Attach(sim);
  sim->add_option("--truth", sim_truth, "polynomial JSON to sample (random when omitted)");
  sim->add_option("--truth-out", sim_truth_out, "write the generating polynomial JSON here");

  std::vector<std::size_t> sweep_Ms;
  std::vector<double> sweep_rhos;
  std::vector<std::string> sweep_dists;
  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo success rate over sample counts");
  sweep_f.Attach(sweep);
  sweep->add_option("--Ms", sweep_Ms, "sample counts to sweep");
  sweep->add_option("--rhos", sweep_rhos, "outlier rates to sweep");
  sweep->add_option("--dists", sweep_dists, "distributions to sweep")
      ->check(CLI::IsMember({"uniform", "chebyshev"}));

  auto* norms = app.add_subcommand("verify-norms", "check the norm inequalities numerically");
  norms_f.Attach(norms);

  std::vector<std::size_t> lb_Ms;
  std::optional<double> lb_C;
  std::string lb_json;
  auto* lb = app.add_subcommand("lowerbound", "run the lower-bound experiments");
  lb_f.Attach(lb);
  lb->add_option("--Ms", lb_Ms, "sample counts to sweep");
  lb->add_option("--C", lb_C, "approximation factor C");
  lb->add_option("--json-out", lb_json, "write experiment details JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ReportError("invalid_argument", e.what());
    return kExitInput;
  }

  try {
    if (*fit) return CmdFit(fit_f, fit_input, fit_truth, fit_poly_out, fit_trace_out);
    if (*sim) return CmdSimulate(sim_f, sim_truth, sim_truth_out);
    if (*sweep) return CmdSweep(sweep_f, sweep_Ms, sweep_rhos, sweep_dists);
    if (*norms) return CmdVerifyNorms(norms_f);
    if (*lb) return CmdLowerbound(lb_f, lb_Ms, lb_C, lb_json);
  } catch (const ApiFailure& e) {
    ReportError(robpoly_status_name(e.status), e.message);
    return (e.status == ROBPOLY_ERR_NUMERICAL || e.status == ROBPOLY_ERR_INTERNAL) ? kExitNumerical
                                                                                  : kExitInput;
  } catch (const InputFailure& e) {
    ReportError("invalid_argument", e.message);
    return kExitInput;
  }
  return kExitInput;
}
