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

#include "gammakit/decomposition.hpp"

#include <algorithm>
#include <string>

#include "gammakit/errors.hpp"
#include "gammakit/linalg.hpp"

namespace gammakit {

namespace {

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

Matrix orthonormalize(const Matrix& a) {
  if (a.cols() == 0) return a;
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

std::string matrix_name(int k, int n) {
  return k == n ? std::string("P") : "S" + std::to_string(k);
}

}  // namespace

Matrix maximal_unitary_subspace(const Matrix& p, double tol) {
  if (p.rows() != p.cols()) throw InvalidDimension("P must be square");
  const Eigen::Index dim = p.rows();
  if (dim == 0) return Matrix(0, 0);
  if (spectral_norm(p) > 1.0 + tol) {
    throw InvalidArgument("P is not a contraction");
  }
  const Matrix identity = Matrix::Identity(dim, dim);
  Matrix basis = numerical_kernel(
      stack(identity - p.adjoint() * p, identity - p * p.adjoint()), tol);

  // Each pass either keeps the dimension (fixed point) or lowers it, so at
  // most dim passes run.
  for (Eigen::Index pass = 0; pass <= dim && basis.cols() > 0; ++pass) {
    const Matrix outside = identity - basis * basis.adjoint();
    const Matrix forward = outside * p * basis;
    const Matrix backward = outside * p.adjoint() * basis;
    const Matrix keep = numerical_kernel(stack(forward, backward), tol);
    if (keep.cols() == basis.cols()) break;
    basis = keep.cols() == 0 ? Matrix(dim, 0) : orthonormalize(basis * keep);
  }
  return basis;
}

bool is_cnu(const Matrix& p, double tol) {
  return maximal_unitary_subspace(p, tol).cols() == 0;
}

DecompositionResult canonical_decompose(const OperatorTuple& tuple, double tol) {
  const int n = tuple.n();
  const Eigen::Index dim = tuple.dim();
  DecompositionResult result;
  result.tol = tol;
  result.scale = tuple.scale();
  result.basis_h1 = maximal_unitary_subspace(tuple.P(), tol);
  if (result.basis_h1.cols() == 0) result.basis_h1 = Matrix(dim, 0);
  result.basis_h2 = result.basis_h1.cols() == dim
                        ? Matrix(dim, 0)
                        : orthogonal_complement(result.basis_h1, dim);

  TheoremViolation::Diagnostics diagnostics;
  bool reduces = true;
  for (int k = 1; k <= n; ++k) {
    const Matrix& m = tuple.coordinate(k);
    BlockResidual residual{matrix_name(k, n), 0.0, 0.0};
    if (result.basis_h1.cols() > 0 && result.basis_h2.cols() > 0) {
      residual.upper = spectral_norm(result.basis_h1.adjoint() * m * result.basis_h2);
      residual.lower = spectral_norm(result.basis_h2.adjoint() * m * result.basis_h1);
    }
    diagnostics.emplace_back(residual.name + ".upper", residual.upper);
    diagnostics.emplace_back(residual.name + ".lower", residual.lower);
    reduces = reduces && std::max(residual.upper, residual.lower) <= tol * result.scale;
    result.residuals.push_back(std::move(residual));
  }
  if (!reduces) {
    diagnostics.emplace_back("threshold", tol * result.scale);
    diagnostics.emplace_back("k", static_cast<double>(result.basis_h1.cols()));
    throw TheoremViolation(
        "the maximal unitary subspace of P does not reduce the tuple", diagnostics);
  }

  result.unitary_part = tuple.compressed(result.basis_h1);
  result.cnu_part = tuple.compressed(result.basis_h2);

  const GammaUnitaryVerdict unitary =
      is_gamma_unitary(result.unitary_part, std::max(tol, 1e-10));
  if (!unitary.verdict) {
    diagnostics.emplace_back("unitarity_residual", unitary.unitarity_residual);
    diagnostics.emplace_back("symmetry_residual", unitary.symmetry_residual);
    diagnostics.emplace_back("spectral_margin", unitary.spectral_margin);
    throw TheoremViolation("the unitary part is not a Gamma_n-unitary (" +
                               unitary.failed_check + ")",
                           diagnostics);
  }
  if (!is_cnu(result.cnu_part.P(), tol)) {
    throw TheoremViolation("the remaining part of P still has a unitary piece",
                           diagnostics);
  }
  return result;
}

VerificationReport verify_decomposition(const OperatorTuple& tuple,
                                        const DecompositionResult& result,
                                        double tol) {
  VerificationReport report;
  const int n = tuple.n();
  const Eigen::Index dim = tuple.dim();
  const Matrix& q1 = result.basis_h1;
  const Matrix& q2 = result.basis_h2;
  const double scale = tuple.scale();

  auto add = [&report](std::string name, double value, double threshold) {
    const bool passed = value <= threshold;
    report.passed = report.passed && passed;
    report.checks.push_back({std::move(name), value, threshold, passed});
  };

  Matrix all(dim, q1.cols() + q2.cols());
  if (q1.cols() > 0) all.leftCols(q1.cols()) = q1;
  if (q2.cols() > 0) all.rightCols(q2.cols()) = q2;
  const double orthonormality =
      all.cols() == dim ? spectral_norm(all.adjoint() * all - Matrix::Identity(dim, dim))
                        : 1.0;
  add("basis_orthonormality", orthonormality, tol);

  for (int k = 1; k <= n; ++k) {
    const Matrix& m = tuple.coordinate(k);
    double off = 0.0;
    if (q1.cols() > 0 && q2.cols() > 0) {
      off = std::max(spectral_norm(q1.adjoint() * m * q2),
                     spectral_norm(q2.adjoint() * m * q1));
    }
    add("block_offdiag:" + matrix_name(k, n), off, tol * scale);
  }

  if (q1.cols() > 0) {
    const Matrix p1 = q1.adjoint() * tuple.P() * q1;
    for (int i = 1; i < n; ++i) {
      const Matrix si = q1.adjoint() * tuple.S(i) * q1;
      const Matrix sj = q1.adjoint() * tuple.S(n - i) * q1;
      add("unitary_symmetry:S" + std::to_string(i),
          spectral_norm(si - sj.adjoint() * p1), tol * scale);
    }
  }

  for (int k = 1; k <= n; ++k) {
    const Matrix& m = tuple.coordinate(k);
    Matrix rebuilt = Matrix::Zero(dim, dim);
    if (result.unitary_part.dim() > 0) {
      rebuilt += q1 * result.unitary_part.coordinate(k) * q1.adjoint();
    }
    if (result.cnu_part.dim() > 0) {
      rebuilt += q2 * result.cnu_part.coordinate(k) * q2.adjoint();
    }
    add("reconstruction:" + matrix_name(k, n),
        spectral_norm(rebuilt - m) / std::max(1.0, spectral_norm(m)), tol);
  }
  return report;
}

}  // namespace gammakit
