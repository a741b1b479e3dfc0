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

#include <complex>

#include <Eigen/Dense>

namespace gammakit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance on fiber-root moduli for membership decisions.
inline constexpr double kDefaultMembershipTol = 1e-9;

/// Construction threshold for commutativity residuals of operator tuples.
inline constexpr double kCommutativityTol = 1e-10;

/// Tolerance on | |omega| - 1 | accepted for rotations.
inline constexpr double kUnimodularTol = 1e-12;

}  // namespace gammakit
