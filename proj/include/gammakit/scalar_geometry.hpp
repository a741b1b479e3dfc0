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

#include <optional>
#include <span>
#include <vector>

#include "gammakit/alpha_grid.hpp"
#include "gammakit/types.hpp"

namespace gammakit {

/// A candidate point (s_1, ..., s_{n-1}, p) of C^n. Its fiber polynomial is
///   z^n - s_1 z^{n-1} + s_2 z^{n-2} - ... + (-1)^n p,
/// whose roots are the preimages of the point under symmetrization.
class GammaPoint {
 public:
  GammaPoint(std::vector<Complex> s, Complex p);

  int n() const { return static_cast<int>(s_.size()) + 1; }
  std::span<const Complex> s() const { return s_; }
  /// s_i for 1 <= i <= n-1.
  Complex s(int i) const;
  Complex p() const { return p_; }

  /// Coordinate k in 1..n; k == n is p.
  Complex coordinate(int k) const;
  std::vector<Complex> coordinates() const;

  /// Monic fiber polynomial coefficients, highest degree first (size n+1).
  std::vector<Complex> fiber_coefficients() const;

  /// Euclidean norm of the coordinate vector.
  double norm() const;

  /// (alpha s_1, alpha^2 s_2, ..., alpha^n p) for any complex alpha.
  GammaPoint scaled(Complex alpha) const;

  friend bool operator==(const GammaPoint&, const GammaPoint&) = default;

 private:
  std::vector<Complex> s_;
  Complex p_;
};

enum class Region { kClosed, kOpen, kDistinguishedBoundary };

const char* region_name(Region region);

struct MembershipVerdict {
  Region region = Region::kClosed;
  bool inside = false;
  double max_root_modulus = 0.0;
  double min_root_modulus = 0.0;
  /// 1 - max_root_modulus; positive inside the open set.
  double margin = 0.0;
  /// max_j | |z_j| - 1 |, the quantity tested for the distinguished boundary.
  double boundary_deviation = 0.0;
};

/// Elementary symmetric functions of z via incremental expansion of
/// prod (X - z_j). Throws InvalidDimension for fewer than two entries.
GammaPoint symmetrize(std::span<const Complex> z);

/// Roots of the fiber polynomial with multiplicity. Eigenvalues of the
/// companion matrix are polished: simple roots by guarded Newton steps, and
/// tight clusters are replaced by the root of the matching derivative when
/// that reproduces the coefficients at least as well. Throws
/// NumericalFailure when symmetrize(roots) misses the point by more than
/// 1e-9 * (1 + |point|).
std::vector<Complex> fiber_roots(const GammaPoint& point);

/// Root-location membership test in the closed set, the open set or the
/// distinguished boundary.
MembershipVerdict membership(const GammaPoint& point, Region region,
                             double tol = kDefaultMembershipTol);

/// (w s_1, w^2 s_2, ..., w^n p) for unimodular w.
GammaPoint rotate_point(const GammaPoint& point, Complex omega);

/// c_i = (s_i - conj(s_{n-i}) p) / (1 - |p|^2), the unique solution of
/// s_i = c_i + conj(c_{n-i}) p. Empty when |p| >= 1.
std::optional<std::vector<Complex>> costara_coefficients(const GammaPoint& point);

/// Membership in the closed set decided by recursing on the Costara
/// coefficients down to the closed disc. Empty when |p| >= 1 at the top
/// level. A deeper level with |p| within tol of 1 is settled by the root test.
std::optional<bool> costara_membership(const GammaPoint& point,
                                       double tol = kDefaultMembershipTol);

/// Scalar pencil in expanded form:
///   n^2 (1 - |p|^2) + |s_i|^2 - |s_{n-i}|^2
///     - n (s_i - conj(s_{n-i}) p) - n (conj(s_i) - conj(p) s_{n-i}).
double scalar_pencil_value(const GammaPoint& point, int i);

/// The same pencil as |n - s_i|^2 - |n p - s_{n-i}|^2.
double scalar_pencil_factored(const GammaPoint& point, int i);

/// Evaluates every pencil at (alpha s_1, ..., alpha^n p) over the grid along
/// with the modulus form of the inequality. Throws NumericalFailure if the two
/// forms disagree beyond round-off.
PencilScanReport scalar_pencil_scan(const GammaPoint& point, const AlphaGrid& grid);

}  // namespace gammakit
