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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammakit {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidDimension,
  kNumericalFailure,
  kDegenerateCombination,
  kTheoremViolation,
  kParse,
};

const char* error_code_name(ErrorCode code);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCode::kInvalidArgument, message) {}
};

class InvalidDimension : public Error {
 public:
  explicit InvalidDimension(const std::string& message)
      : Error(ErrorCode::kInvalidDimension, message) {}
};

/// An eigen/singular value routine failed or produced an answer whose
/// residual is too large to be trusted.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& message, double residual)
      : Error(ErrorCode::kNumericalFailure, message), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Simultaneous triangularization kept failing its residual check.
class DegenerateCombination : public Error {
 public:
  DegenerateCombination(const std::string& message, double residual)
      : Error(ErrorCode::kDegenerateCombination, message),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The canonical decomposition produced blocks that contradict the
/// decomposition theorem. Either the input is not a Gamma_n-contraction or the
/// computation broke down numerically; the diagnostics say which residuals
/// were out of range.
class TheoremViolation : public Error {
 public:
  using Diagnostics = std::vector<std::pair<std::string, double>>;

  TheoremViolation(const std::string& message, Diagnostics diagnostics);

  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorCode::kParse, message) {}
};

}  // namespace gammakit
