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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammakit/alpha_grid.hpp"
#include "gammakit/operator_core.hpp"
#include "gammakit/polynomial.hpp"

namespace gammakit {

enum class Verdict {
  kExactGammaContraction,
  kNecessaryConditionsPassed,
  kFailed,
};

const char* verdict_name(Verdict verdict);

struct CertifyOptions {
  AlphaGrid grid = AlphaGrid::standard();
  double tol = 1e-9;             // norm bounds and spectrum membership
  double pencil_tol = 1e-8;      // pencil minimum must be >= -pencil_tol
  double normality_tol = 1e-8;   // ||[A, A*]|| <= normality_tol * ||A||^2
  int vn_trials = 8;
  int vn_degree = 4;
  int vn_terms = 6;
  int vn_samples = 2000;
  std::uint64_t seed = 0x63657274ULL;
};

/// Names of the layered checks, in the order they run.
inline constexpr const char* kCheckCommutativity = "commutativity";
inline constexpr const char* kCheckNormBounds = "norm_bounds";
inline constexpr const char* kCheckJointSpectrum = "joint_spectrum";
inline constexpr const char* kCheckPencil = "pencil_positivity";
inline constexpr const char* kCheckVonNeumann = "von_neumann";

struct CertificateReport {
  Verdict verdict = Verdict::kFailed;
  std::optional<std::string> failed_check;
  std::vector<std::string> checks_passed;

  double commutativity_residual = 0.0;
  std::vector<double> s_norms;
  double p_norm = 0.0;
  bool normal = false;
  double normality_residual = 0.0;  // max_k ||[A_k, A_k*]|| / ||A_k||^2

  std::optional<JointSpectrum> spectrum;
  std::vector<double> spectrum_margins;

  std::optional<double> pencil_minimum;       // over every index i
  std::optional<double> pencil_edge_minimum;  // over i = 1 and i = n-1, enforced
  int pencil_argmin_index = 0;
  Complex pencil_argmin_alpha;

  std::vector<VonNeumannResult> vn_results;
  std::string note;
};

/// Layered check that a commuting tuple is a Gamma_n-contraction:
/// commutativity, norm bounds, joint spectrum in Gamma_n, pencil positivity
/// over the alpha grid, and von Neumann falsification with random
/// polynomials. Stops at the first failed check. Normal tuples whose joint
/// spectrum lies in Gamma_n are certified exactly; for other tuples passing
/// every check only establishes necessary conditions.
CertificateReport certify_gamma_contraction(const OperatorTuple& tuple,
                                            const CertifyOptions& options = {});

}  // namespace gammakit
