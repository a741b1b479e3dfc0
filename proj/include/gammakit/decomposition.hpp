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

#include <string>
#include <vector>

#include "gammakit/operator_core.hpp"
#include "gammakit/types.hpp"

namespace gammakit {

inline constexpr double kDefaultDecompositionTol = 1e-9;

/// Orthonormal basis of the largest subspace that reduces P and on which P is
/// unitary. Starts from ker(I - P*P) and ker(I - PP*) and repeatedly keeps the
/// vectors h with both Ph and P*h still in the subspace. Throws
/// InvalidArgument when ||P|| > 1 + tol.
Matrix maximal_unitary_subspace(const Matrix& p, double tol = kDefaultDecompositionTol);

/// True iff P has no nonzero reducing subspace on which it is unitary.
bool is_cnu(const Matrix& p, double tol = kDefaultDecompositionTol);

/// Off-diagonal block norms of one matrix of the tuple.
struct BlockResidual {
  std::string name;  // "S1", ..., "P"
  double upper = 0.0;  // ||Q1* M Q2||
  double lower = 0.0;  // ||Q2* M Q1||
};

struct DecompositionResult {
  Matrix basis_h1;  // dim x k
  Matrix basis_h2;  // dim x (dim - k)
  OperatorTuple unitary_part = OperatorTuple::empty(2);
  OperatorTuple cnu_part = OperatorTuple::empty(2);
  std::vector<BlockResidual> residuals;
  double scale = 1.0;
  double tol = kDefaultDecompositionTol;

  Eigen::Index k() const { return basis_h1.cols(); }
};

/// Splits the tuple along H1 = maximal_unitary_subspace(P) and its
/// complement. The claim that both pieces reduce every S_i is checked, not
/// imposed: off-diagonal blocks above tol * scale, a unitary part that is
/// not a Gamma_n-unitary or a c.n.u. part that is not completely non-unitary
/// raise TheoremViolation. Certifying the input as a Gamma_n-contraction is the
/// caller's job.
DecompositionResult canonical_decompose(const OperatorTuple& tuple,
                                        double tol = kDefaultDecompositionTol);

struct DecompositionCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<DecompositionCheck> checks;
  bool passed = true;
};

/// Re-derives, from the bases stored in `result`:
///   block_offdiag:<M>   off-diagonal blocks of every matrix vanish,
///   unitary_symmetry:S<i>   S_i11 = S_(n-i)11* P_1 on H1,
///   reconstruction:<M>  Q1 A Q1* + Q2 B Q2* reproduces the input,
/// plus basis orthonormality. Values are margins; nothing throws.
VerificationReport verify_decomposition(const OperatorTuple& tuple,
                                        const DecompositionResult& result,
                                        double tol = 1e-8);

}  // namespace gammakit
