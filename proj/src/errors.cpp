// Copyright 2026 The gammakit Authors
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

#include "gammakit/errors.hpp"

#include <sstream>

namespace gammakit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kInvalidDimension:
      return "invalid-dimension";
    case ErrorCode::kNumericalFailure:
      return "numerical-failure";
    case ErrorCode::kDegenerateCombination:
      return "degenerate-combination";
    case ErrorCode::kTheoremViolation:
      return "theorem-violation";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

namespace {

std::string with_table(const std::string& message,
                       const TheoremViolation::Diagnostics& diagnostics) {
  std::ostringstream out;
  out << message;
  for (const auto& [name, value] : diagnostics) {
    out << "\n  " << name << " = " << value;
  }
  return out.str();
}

}  // namespace

TheoremViolation::TheoremViolation(const std::string& message,
                                   Diagnostics diagnostics)
    : Error(ErrorCode::kTheoremViolation, with_table(message, diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace gammakit
