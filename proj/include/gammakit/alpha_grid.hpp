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

#include <vector>

#include "gammakit/types.hpp"

namespace gammakit {

/// Sample of the closed unit disc used to scan the pencils over alpha. The
/// grid is a set of concentric rings plus a denser ring on |alpha| = 1, which
/// is always present.
struct AlphaGrid {
  std::vector<double> radii;
  int angles_per_ring = 256;
  int boundary_angles = 1024;

  /// Radii {1/8, ..., 1} with 256 angles each, plus 1024 angles on the circle.
  static AlphaGrid standard();

  /// Radii {1/rings, ..., 1}, `angles` per ring and 4 * angles on the circle.
  static AlphaGrid uniform(int rings, int angles);

  /// Same layout with `factor` times the rings and angles (factor^2 density).
  AlphaGrid refined(int factor) const;

  bool includes_unit_circle() const { return boundary_angles > 0; }

  /// Throws InvalidArgument for radii outside [0,1] or non-positive counts.
  void validate() const;

  /// All sampled alpha, ring by ring, then the boundary ring.
  std::vector<Complex> samples() const;
};

/// One evaluation of a pencil at a sampled alpha. For scalar scans the
/// modulus pair is |n alpha^n p - alpha^(n-i) s_(n-i)| and |n - alpha^i s_i|;
/// operator scans leave them NaN and store the minimum eigenvalue as `value`.
struct PencilSample {
  int index = 0;
  Complex alpha;
  double value = 0.0;
  double modulus_lhs = 0.0;
  double modulus_rhs = 0.0;
};

struct PencilScanReport {
  int n = 0;
  bool operator_level = false;
  std::vector<PencilSample> samples;
  double minimum = 0.0;
  int argmin_index = 0;
  Complex argmin_alpha;
  std::vector<double> per_index_minimum;  // entry i-1 for pencil i
  /// Scalar scans only: largest normalized gap between the pencil value and
  /// rhs^2 - lhs^2, and the number of alpha where the sign verdicts disagree
  /// outside round-off.
  double equivalence_max_discrepancy = 0.0;
  int verdict_disagreements = 0;
};

/// Fills minimum / argmin / per-index minima from `samples` in sample order.
void summarize_scan(PencilScanReport& report);

}  // namespace gammakit
