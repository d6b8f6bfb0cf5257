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

#ifndef ROBPOLY_IO_HPP
#define ROBPOLY_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "robpoly/polynomial.hpp"
#include "robpoly/regression.hpp"
#include "robpoly/sampling.hpp"

namespace robpoly {

using Json = nlohmann::json;

// {"n": .., "d": .., "basis": "chebyshev", "coeffs": [...]}
Json PolyToJson(const MultiPoly& p);
MultiPoly PolyFromJson(const Json& j);

// Header x1,...,xn,y[,is_outlier]; lines starting with '#' are comments.
void WriteSamplesCsv(std::ostream& os, const SampleSet& s, bool with_flags = true);
std::string SamplesToCsv(const SampleSet& s, bool with_flags = true);
SampleSet ReadSamplesCsv(std::istream& is);
SampleSet ParseSamplesCsv(const std::string& text);

Json SamplesToJson(const SampleSet& s);
SampleSet SamplesFromJson(const Json& j);

Json ReportToJson(const FitReport& r);
// iteration,sup_error
std::string TraceCsv(const FitReport& r);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& content);

// Shortest text that round-trips the double.
std::string FormatDouble(double v);

}  // namespace robpoly

#endif  // ROBPOLY_IO_HPP
