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
#include "gammakit/scalar_geometry.hpp"
#include "gammakit/types.hpp"

namespace gammakit {

/// n commuting square matrices (S_1, ..., S_{n-1}, P) of equal size.
class OperatorTuple {
 public:
  /// Enforce rejects tuples whose commutativity residual exceeds
  /// kCommutativityTol; Record only stores the residual so that a certifier
  /// can report the failure.
  enum class Commutativity { kEnforce, kRecord };

  OperatorTuple(std::vector<Matrix> s, Matrix p,
                Commutativity policy = Commutativity::kEnforce);

  /// 1x1 tuple holding the coordinates of a point.
  static OperatorTuple from_point(const GammaPoint& point);

  /// The zero-dimensional tuple used for empty decomposition parts.
  static OperatorTuple empty(int n);

  int n() const { return static_cast<int>(s_.size()) + 1; }
  Eigen::Index dim() const { return p_.rows(); }
  const Matrix& S(int i) const;
  const Matrix& P() const { return p_; }
  const std::vector<Matrix>& S_list() const { return s_; }
  /// Coordinate k in 1..n; k == n is P.
  const Matrix& coordinate(int k) const;

  /// max over pairs ||AB - BA|| / (1 + ||A|| ||B||).
  double commutativity_residual() const { return commutativity_residual_; }

  /// max(1, largest spectral norm among the matrices).
  double scale() const { return scale_; }

  /// U M U* for every matrix.
  OperatorTuple conjugated(const Matrix& unitary) const;

  /// Q* M Q for every matrix, Q with orthonormal columns.
  OperatorTuple compressed(const Matrix& basis) const;

 private:
  OperatorTuple() = default;
  void measure();

  std::vector<Matrix> s_;
  Matrix p_;
  double commutativity_residual_ = 0.0;
  double scale_ = 1.0;
};

/// Commutativity residual as defined for OperatorTuple, for any family.
double commutativity_residual(const std::vector<Matrix>& family);

/// The pencil
///   (n - A)*(n - A) - (n Q - B)*(n Q - B),
/// A = alpha^i S_i, B = alpha^{n-i} S_{n-i}, Q = alpha^n P, for |alpha| <= 1.
Matrix operator_pencil(const OperatorTuple& tuple, int i, Complex alpha);

/// The same pencil in expanded form
///   n^2 (I - Q*Q) + (A*A - B*B) - n (A - B*Q) - n (A* - Q*B).
Matrix operator_pencil_expanded(const OperatorTuple& tuple, int i, Complex alpha);

/// Minimum eigenvalue of every pencil at every sampled alpha.
PencilScanReport pencil_min_eig_scan(const OperatorTuple& tuple, const AlphaGrid& grid);

inline constexpr std::uint64_t kDefaultSpectrumSeed = 0x6a6f696e74ULL;

struct JointSpectrum {
  /// points[j][k-1] is the k-th coordinate of the j-th joint eigenvalue.
  std::vector<std::vector<Complex>> points;
  /// Largest strictly-lower-triangular mass (Frobenius) after the common
  /// Schur transform, relative to the tuple scale.
  double residual = 0.0;
  int attempts = 0;
};

/// Simultaneous unitary triangularization through the Schur form of a random
/// linear combination; up to five combinations are tried. Throws
/// DegenerateCombination if none triangularizes the whole family to
/// 1e-8 * scale.
JointSpectrum joint_spectrum(const OperatorTuple& tuple,
                             std::uint64_t seed = kDefaultSpectrumSeed);

/// Joint eigenvalues as points (n >= 2).
std::vector<GammaPoint> joint_spectrum_points(const JointSpectrum& spectrum);

struct GammaUnitaryVerdict {
  bool verdict = false;
  double unitarity_residual = 0.0;  // max(||P*P - I||, ||PP* - I||)
  double symmetry_residual = 0.0;   // max_i ||S_i - S_{n-i}* P|| / scale
  double spectral_margin = 0.0;     // min over scaled joint points of 1 - max root
  double spectrum_residual = 0.0;
  std::string failed_check;         // empty when verdict is true
};

/// P unitary, S_i = S_{n-i}* P, and ((n-1)/n S_1, ..., 1/n S_{n-1}) has its
/// joint spectrum in Gamma_{n-1} (closed disc when n = 2).
GammaUnitaryVerdict is_gamma_unitary(const OperatorTuple& tuple, double tol = 1e-10);

/// (w S_1, w^2 S_2, ..., w^n P) for unimodular w.
OperatorTuple rotate_tuple(const OperatorTuple& tuple, Complex omega);

}  // namespace gammakit
