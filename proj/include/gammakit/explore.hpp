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
#include <vector>

#include "gammakit/alpha_grid.hpp"
#include "gammakit/scalar_geometry.hpp"

namespace gammakit {

/// Search for points outside Gamma_n whose scalar pencils are nonnegative on
/// the whole grid. Such a point would show that pencil positivity does not
/// characterize Gamma_n; none is known.
struct ExploreOptions {
  int n = 3;
  int budget = 1000;
  std::uint64_t seed = 0x6578706cULL;
  AlphaGrid grid = AlphaGrid::standard();
  double tol = kDefaultMembershipTol;
};

struct ExploreCandidate {
  GammaPoint point;
  double membership_margin;   // negative: outside
  double pencil_min;          // on the base grid
  double pencil_min_dense;    // on the 4x denser grid
};

struct ExploreReport {
  int sampled = 0;
  int outside = 0;
  int pencil_nonnegative = 0;
  int dropped_on_refinement = 0;
  std::vector<ExploreCandidate> candidates;
};

/// Samples `budget` points with one fiber root pushed just outside the unit
/// circle (modulus 1 + delta, delta log-uniform in [1e-4, 0.5]) and the others
/// in the disc of radius 1.2. Candidates are re-scanned on grid.refined(2)
/// and kept only if still nonnegative there. Throws InvalidArgument for
/// budget < 1.
ExploreReport explore(const ExploreOptions& options);

struct RegionSliceOptions {
  GammaPoint base = GammaPoint({0.0}, 0.0);
  int vary = 1;            // coordinate index in 1..n that is gridded
  double extent = 0.0;     // half-width of the square; 0 means n + 0.5
  int resolution = 81;     // samples per axis
  AlphaGrid grid = AlphaGrid::uniform(4, 64);
  double tol = kDefaultMembershipTol;
};

struct SliceRow {
  double re = 0.0;
  double im = 0.0;
  bool member = false;
  double min_pencil = 0.0;
};

/// Grid over one complex coordinate with the others fixed at `base`; n must
/// be 2 or 3 (InvalidDimension otherwise).
std::vector<SliceRow> region_slice(const RegionSliceOptions& options);

}  // namespace gammakit
