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

#include "robpoly/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "robpoly/error.hpp"

namespace robpoly {

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json PolyToJson(const MultiPoly& p) {
  Json j;
  j["n"] = p.dim();
  j["d"] = p.degree();
  j["basis"] = "chebyshev";
  j["coeffs"] = std::vector<double>(p.coeffs().begin(), p.coeffs().end());
  return j;
}

MultiPoly PolyFromJson(const Json& j) {
  try {
    Require(j.is_object(), "polynomial JSON must be an object", ErrorCode::kParse);
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const std::string basis = j.value("basis", std::string("chebyshev"));
    Require(basis == "chebyshev", "polynomial JSON: unsupported basis '" + basis + "'",
            ErrorCode::kParse);
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    return MultiPoly(n, d, std::move(coeffs));
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("polynomial JSON: ") + e.what());
  }
}

void WriteSamplesCsv(std::ostream& os, const SampleSet& s, bool with_flags) {
  const int n = s.dim();
  const bool flags = with_flags && s.outlier_flags().size() == s.size();
  for (int i = 0; i < n; ++i) os << 'x' << (i + 1) << ',';
  os << 'y';
  if (flags) os << ",is_outlier";
  os << '\n';
  std::string line;
  for (std::size_t k = 0; k < s.size(); ++k) {
    line.clear();
    for (double v : s.point(k)) {
      line += FormatDouble(v);
      line += ',';
    }
    line += FormatDouble(s.label(k));
    if (flags) line += s.outlier_flags()[k] ? ",1" : ",0";
    line += '\n';
    os << line;
  }
}

std::string SamplesToCsv(const SampleSet& s, bool with_flags) {
  std::ostringstream os;
  WriteSamplesCsv(os, s, with_flags);
  return os.str();
}

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t' && c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double ParseNumber(const std::string& tok, std::size_t line_no, const std::string& column) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (tok.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": column " + column +
                                ": cannot parse '" + tok + "' as a finite number");
  }
  return v;
}

}  // namespace

SampleSet ReadSamplesCsv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    header = SplitCsv(line);
    break;
  }
  Require(!header.empty(), "sample CSV: missing header", ErrorCode::kParse);
  bool flags = header.back() == "is_outlier";
  const std::size_t ycol = header.size() - (flags ? 2 : 1);
  Require(ycol >= 1 && header[ycol] == "y",
          "sample CSV: line " + std::to_string(line_no) + ": header must be x1,...,xn,y[,is_outlier]",
          ErrorCode::kParse);
  for (std::size_t i = 0; i < ycol; ++i) {
    Require(header[i] == "x" + std::to_string(i + 1),
            "sample CSV: line " + std::to_string(line_no) + ": expected column x" +
                std::to_string(i + 1) + ", found '" + header[i] + "'",
            ErrorCode::kParse);
  }
  const int n = static_cast<int>(ycol);
  std::vector<double> pts;
  std::vector<double> ys;
  std::vector<bool> out;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto tok = SplitCsv(line);
    if (tok.size() != header.size()) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " fields, found " +
                                  std::to_string(tok.size()));
    }
    for (std::size_t i = 0; i < ycol; ++i) {
      const double v = ParseNumber(tok[i], line_no, header[i]);
      if (v < -1.0 || v > 1.0) {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": column " + header[i] +
                                    " value " + tok[i] + " outside [-1, 1]");
      }
      pts.push_back(v);
    }
    ys.push_back(ParseNumber(tok[ycol], line_no, "y"));
    if (flags) {
      const std::string& f = tok[ycol + 1];
      if (f == "1" || f == "true") {
        out.push_back(true);
      } else if (f == "0" || f == "false") {
        out.push_back(false);
      } else {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                    ": is_outlier must be 0/1/true/false, found '" + f + "'");
      }
    }
  }
  SampleSet s(n, std::move(pts), std::move(ys));
  if (flags) return s.WithTruth(std::nullopt, std::move(out));
  return s;
}

SampleSet ParseSamplesCsv(const std::string& text) {
  std::istringstream is(text);
  return ReadSamplesCsv(is);
}

Json SamplesToJson(const SampleSet& s) {
  Json j;
  j["n"] = s.dim();
  Json pts = Json::array();
  for (std::size_t k = 0; k < s.size(); ++k) {
    pts.push_back(std::vector<double>(s.point(k).begin(), s.point(k).end()));
  }
  j["points"] = std::move(pts);
  j["labels"] = std::vector<double>(s.labels().begin(), s.labels().end());
  if (s.outlier_flags().size() == s.size()) {
    j["is_outlier"] = std::vector<bool>(s.outlier_flags());
  }
  if (s.truth()) j["truth"] = PolyToJson(*s.truth());
  return j;
}

SampleSet SamplesFromJson(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<double> flat;
    for (const auto& p : j.at("points")) {
      const auto x = p.get<std::vector<double>>();
      Require(static_cast<int>(x.size()) == n, "sample JSON: point has wrong dimension",
              ErrorCode::kParse);
      flat.insert(flat.end(), x.begin(), x.end());
    }
    auto labels = j.at("labels").get<std::vector<double>>();
    SampleSet s(n, std::move(flat), std::move(labels));
    std::optional<MultiPoly> truth;
    if (j.contains("truth")) truth = PolyFromJson(j.at("truth"));
    std::vector<bool> flags;
    if (j.contains("is_outlier")) flags = j.at("is_outlier").get<std::vector<bool>>();
    if (truth || !flags.empty()) return s.WithTruth(truth, std::move(flags));
    return s;
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("sample JSON: ") + e.what());
  }
}

Json ReportToJson(const FitReport& r) {
  Json j;
  j["variant"] = ToString(r.variant);
  j["p_hat"] = PolyToJson(r.p_hat);
  j["m"] = r.m;
  j["iterations"] = r.iterations;
  j["iteration_bound"] = r.iteration_bound;
  j["cap_hit"] = r.cap_hit;
  j["errors"] = r.errors;
  if (!r.errors.empty()) j["final_error"] = r.errors.back();
  j["cells_skipped"] = r.cells_skipped;
  j["lp"] = {{"solves", r.lp_solves}, {"iterations", r.lp_iterations}};
  j["samples_used"] = r.samples_used;
  j["samples_dropped"] = r.samples_dropped;
  j["unstable_survivors"] = r.unstable_survivors;
  j["seconds"] = r.seconds;
  j["warnings"] = r.warnings;
  return j;
}

std::string TraceCsv(const FitReport& r) {
  std::string out = "iteration,sup_error\n";
  for (std::size_t t = 0; t < r.errors.size(); ++t) {
    out += std::to_string(t) + ',' + FormatDouble(r.errors[t]) + '\n';
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), "cannot open '" + path + "' for reading", ErrorCode::kIo);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), "cannot open '" + path + "' for writing", ErrorCode::kIo);
  out << content;
  Require(static_cast<bool>(out), "write to '" + path + "' failed", ErrorCode::kIo);
}

}  // namespace robpoly
