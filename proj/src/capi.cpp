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

#include "robpoly/robpoly.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "robpoly/error.hpp"
#include "robpoly/harness.hpp"
#include "robpoly/io.hpp"

struct robpoly_poly {
  robpoly::MultiPoly p;
};

struct robpoly_samples {
  robpoly::SampleSet s;
};

struct robpoly_report {
  robpoly::FitReport r;
  robpoly::Json config;
};

namespace {

thread_local std::string g_last_error;

robpoly_status ToStatus(robpoly::ErrorCode c) {
  switch (c) {
    case robpoly::ErrorCode::kInvalidArgument: return ROBPOLY_ERR_INVALID_ARGUMENT;
    case robpoly::ErrorCode::kDimensionMismatch: return ROBPOLY_ERR_DIMENSION;
    case robpoly::ErrorCode::kNumerical: return ROBPOLY_ERR_NUMERICAL;
    case robpoly::ErrorCode::kIo: return ROBPOLY_ERR_IO;
    case robpoly::ErrorCode::kParse: return ROBPOLY_ERR_PARSE;
  }
  return ROBPOLY_ERR_INTERNAL;
}

template <typename F>
robpoly_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ROBPOLY_OK;
  } catch (const robpoly::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const robpoly::Json::parse_error& e) {
    g_last_error = std::string("JSON parse error: ") + e.what();
    return ROBPOLY_ERR_PARSE;
  } catch (const robpoly::Json::exception& e) {
    g_last_error = std::string("JSON error: ") + e.what();
    return ROBPOLY_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ROBPOLY_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ROBPOLY_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  robpoly::Require(p != nullptr, std::string(what) + " must not be NULL");
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

robpoly::Json ParseJson(const char* text) {
  if (text == nullptr || *text == '\0') return robpoly::Json::object();
  return robpoly::Json::parse(text);
}

robpoly::RunConfig ParseConfig(const char* text) {
  return robpoly::ParseRunConfig(ParseJson(text));
}

}  // namespace

extern "C" {

const char* robpoly_version(void) { return "0.1.0"; }

const char* robpoly_last_error(void) { return g_last_error.c_str(); }

const char* robpoly_status_name(robpoly_status status) {
  switch (status) {
    case ROBPOLY_OK: return "ok";
    case ROBPOLY_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ROBPOLY_ERR_DIMENSION: return "dimension_mismatch";
    case ROBPOLY_ERR_NUMERICAL: return "numerical_failure";
    case ROBPOLY_ERR_IO: return "io_error";
    case ROBPOLY_ERR_PARSE: return "parse_error";
    case ROBPOLY_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void robpoly_string_free(char* s) { std::free(s); }

robpoly_status robpoly_poly_create(int n, int d, const double* coeffs, size_t count,
                                   robpoly_poly** out) {
  return Guard([&] {
    NotNull(out, "out");
    robpoly::Require(coeffs != nullptr || count == 0, "coeffs must not be NULL");
    std::vector<double> c(coeffs, coeffs + count);
    *out = new robpoly_poly{robpoly::MultiPoly(n, d, std::move(c))};
  });
}

robpoly_status robpoly_poly_from_json(const char* json, robpoly_poly** out) {
  return Guard([&] {
    NotNull(json, "json");
    NotNull(out, "out");
    *out = new robpoly_poly{robpoly::PolyFromJson(robpoly::Json::parse(json))};
  });
}

robpoly_status robpoly_poly_to_json(const robpoly_poly* p, char** out) {
  return Guard([&] {
    NotNull(p, "poly");
    NotNull(out, "out");
    *out = Dup(robpoly::PolyToJson(p->p).dump());
  });
}

robpoly_status robpoly_poly_dim(const robpoly_poly* p, int* n, int* d) {
  return Guard([&] {
    NotNull(p, "poly");
    if (n) *n = p->p.dim();
    if (d) *d = p->p.degree();
  });
}

robpoly_status robpoly_poly_coeffs(const robpoly_poly* p, double* buf, size_t count) {
  return Guard([&] {
    NotNull(p, "poly");
    NotNull(buf, "buf");
    robpoly::Require(count == p->p.size(),
                     "buffer holds " + std::to_string(count) + " values, polynomial has " +
                         std::to_string(p->p.size()),
                     robpoly::ErrorCode::kDimensionMismatch);
    std::copy(p->p.coeffs().begin(), p->p.coeffs().end(), buf);
  });
}

robpoly_status robpoly_poly_eval(const robpoly_poly* p, const double* x, size_t n,
                                 double* out) {
  return Guard([&] {
    NotNull(p, "poly");
    NotNull(x, "x");
    NotNull(out, "out");
    *out = p->p(std::span<const double>(x, n));
  });
}

robpoly_status robpoly_poly_sup_norm(const robpoly_poly* p, double* out) {
  return Guard([&] {
    NotNull(p, "poly");
    NotNull(out, "out");
    *out = robpoly::SupNorm(p->p);
  });
}

robpoly_status robpoly_poly_l1_norm(const robpoly_poly* p, double* out) {
  return Guard([&] {
    NotNull(p, "poly");
    NotNull(out, "out");
    *out = robpoly::L1Norm(p->p);
  });
}

robpoly_status robpoly_poly_distance(const robpoly_poly* a, const robpoly_poly* b,
                                     double* out) {
  return Guard([&] {
    NotNull(a, "a");
    NotNull(b, "b");
    NotNull(out, "out");
    robpoly::Require(a->p.dim() == b->p.dim(), "polynomials differ in dimension",
                     robpoly::ErrorCode::kDimensionMismatch);
    *out = robpoly::SupNorm(robpoly::Sub(a->p, b->p));
  });
}

void robpoly_poly_free(robpoly_poly* p) { delete p; }

robpoly_status robpoly_samples_read_csv(const char* path, robpoly_samples** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new robpoly_samples{robpoly::ParseSamplesCsv(robpoly::ReadFile(path))};
  });
}

robpoly_status robpoly_samples_parse_csv(const char* text, robpoly_samples** out) {
  return Guard([&] {
    NotNull(text, "text");
    NotNull(out, "out");
    *out = new robpoly_samples{robpoly::ParseSamplesCsv(text)};
  });
}

robpoly_status robpoly_samples_to_csv(const robpoly_samples* s, char** out) {
  return Guard([&] {
    NotNull(s, "samples");
    NotNull(out, "out");
    *out = Dup(robpoly::SamplesToCsv(s->s));
  });
}

robpoly_status robpoly_samples_size(const robpoly_samples* s, size_t* count, int* n) {
  return Guard([&] {
    NotNull(s, "samples");
    if (count) *count = s->s.size();
    if (n) *n = s->s.dim();
  });
}

robpoly_status robpoly_samples_set_truth(robpoly_samples* s, const robpoly_poly* truth) {
  return Guard([&] {
    NotNull(s, "samples");
    std::optional<robpoly::MultiPoly> t;
    if (truth) t = truth->p;
    s->s = s->s.WithTruth(t, s->s.outlier_flags());
  });
}

robpoly_status robpoly_samples_truth(const robpoly_samples* s, robpoly_poly** out) {
  return Guard([&] {
    NotNull(s, "samples");
    NotNull(out, "out");
    *out = s->s.truth() ? new robpoly_poly{*s->s.truth()} : nullptr;
  });
}

void robpoly_samples_free(robpoly_samples* s) { delete s; }

robpoly_status robpoly_simulate(const char* config_json, const robpoly_poly* truth,
                                robpoly_samples** out) {
  return Guard([&] {
    NotNull(out, "out");
    const robpoly::RunConfig cfg = ParseConfig(config_json);
    std::optional<robpoly::MultiPoly> t;
    if (truth) t = truth->p;
    *out = new robpoly_samples{robpoly::Simulate(cfg, t)};
  });
}

robpoly_status robpoly_fit(const robpoly_samples* s, const char* config_json,
                           robpoly_report** out) {
  return Guard([&] {
    NotNull(s, "samples");
    NotNull(out, "out");
    const robpoly::RunConfig cfg = ParseConfig(config_json);
    const robpoly::RecoveryConfig rc = robpoly::ToRecoveryConfig(cfg);
    *out = new robpoly_report{robpoly::Recover(s->s, rc), robpoly::RunConfigToJson(cfg)};
  });
}

robpoly_status robpoly_report_poly(const robpoly_report* r, robpoly_poly** out) {
  return Guard([&] {
    NotNull(r, "report");
    NotNull(out, "out");
    *out = new robpoly_poly{r->r.p_hat};
  });
}

robpoly_status robpoly_report_to_json(const robpoly_report* r, char** out) {
  return Guard([&] {
    NotNull(r, "report");
    NotNull(out, "out");
    robpoly::Json j = robpoly::ReportToJson(r->r);
    j["config"] = r->config;
    *out = Dup(j.dump(2));
  });
}

robpoly_status robpoly_report_trace_csv(const robpoly_report* r, char** out) {
  return Guard([&] {
    NotNull(r, "report");
    NotNull(out, "out");
    *out = Dup(robpoly::TraceCsv(r->r) + "# config=" + r->config.dump() + "\n");
  });
}

robpoly_status robpoly_report_error(const robpoly_report* r, double* out) {
  return Guard([&] {
    NotNull(r, "report");
    NotNull(out, "out");
    *out = r->r.errors.empty() ? std::numeric_limits<double>::quiet_NaN() : r->r.errors.back();
  });
}

void robpoly_report_free(robpoly_report* r) { delete r; }

robpoly_status robpoly_sweep(const char* config_json, char** csv_out) {
  return Guard([&] {
    NotNull(csv_out, "csv_out");
    const robpoly::RunConfig cfg = ParseConfig(config_json);
    const auto rows = robpoly::RunSweep(cfg);
    *csv_out = Dup(robpoly::SweepCsv(rows) + "# config=" + robpoly::RunConfigToJson(cfg).dump() + "\n");
  });
}

robpoly_status robpoly_verify_norms(const char* config_json, char** json_out, int* all_pass) {
  return Guard([&] {
    NotNull(json_out, "json_out");
    const robpoly::RunConfig cfg = ParseConfig(config_json);
    const robpoly::NormsSuite suite = robpoly::RunNormsSuite(cfg);
    const std::string echo = "# config=" + robpoly::RunConfigToJson(cfg).dump() + "\n";
    robpoly::Json j;
    j["config"] = robpoly::RunConfigToJson(cfg);
    j["all_pass"] = suite.all_pass;
    j["table"] = robpoly::ChecksTable(suite.checks);
    robpoly::Json checks = robpoly::Json::array();
    for (const auto& c : suite.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["sandwich_csv"] = robpoly::SandwichCsv(suite.sandwich) + echo;
    j["tightness_csv"] = robpoly::TightnessCsv(suite) + echo;
    *json_out = Dup(j.dump(2));
    if (all_pass) *all_pass = suite.all_pass ? 1 : 0;
  });
}

robpoly_status robpoly_lowerbound(const char* config_json, char** json_out) {
  return Guard([&] {
    NotNull(json_out, "json_out");
    const robpoly::RunConfig cfg = ParseConfig(config_json);
    const robpoly::LowerboundSuite suite = robpoly::RunLowerboundSuite(cfg);
    robpoly::Json j = robpoly::LowerboundToJson(suite);
    j["config"] = robpoly::RunConfigToJson(cfg);
    j["csv"] = robpoly::FailureCsv(suite.rows) + "# config=" + j["config"].dump() + "\n";
    *json_out = Dup(j.dump(2));
  });
}

robpoly_status robpoly_config_normalize(const char* config_json, char** json_out) {
  return Guard([&] {
    NotNull(json_out, "json_out");
    *json_out = Dup(robpoly::RunConfigToJson(ParseConfig(config_json)).dump());
  });
}

}  // extern "C"
