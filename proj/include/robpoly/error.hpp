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

#ifndef ROBPOLY_ERROR_HPP
#define ROBPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace robpoly {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kNumerical = 3,
  kIo = 4,
  kParse = 5,
};

// Single exception type for the library. The code is what the C API and
// the CLI map to status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::kInvalidArgument) {
  if (!cond) throw Error(code, what);
}

}  // namespace robpoly

#endif  // ROBPOLY_ERROR_HPP
