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

#include "gammakit/alpha_grid.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "gammakit/errors.hpp"

namespace gammakit {

AlphaGrid AlphaGrid::standard() { return uniform(8, 256); }

AlphaGrid AlphaGrid::uniform(int rings, int angles) {
  if (rings < 1 || angles < 1) {
    throw InvalidArgument("alpha grid needs at least one ring and one angle");
  }
  AlphaGrid grid;
  grid.radii.reserve(static_cast<std::size_t>(rings));
  for (int r = 1; r <= rings; ++r) {
    grid.radii.push_back(static_cast<double>(r) / rings);
  }
  grid.angles_per_ring = angles;
  grid.boundary_angles = 4 * angles;
  return grid;
}

AlphaGrid AlphaGrid::refined(int factor) const {
  if (factor < 1) throw InvalidArgument("refinement factor must be >= 1");
  AlphaGrid out;
  const auto rings = static_cast<int>(radii.size()) * factor;
  for (int r = 1; r <= rings; ++r) {
    out.radii.push_back(static_cast<double>(r) / rings);
  }
  out.angles_per_ring = angles_per_ring * factor;
  out.boundary_angles = boundary_angles * factor;
  return out;
}

void AlphaGrid::validate() const {
  for (double r : radii) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw InvalidArgument("alpha grid radius outside [0, 1]");
    }
  }
  if (angles_per_ring < 1) {
    throw InvalidArgument("alpha grid needs angles_per_ring >= 1");
  }
  if (boundary_angles < 1) {
    throw InvalidArgument("alpha grid must sample the unit circle");
  }
}

std::vector<Complex> AlphaGrid::samples() const {
  validate();
  std::vector<Complex> out;
  out.reserve(radii.size() * static_cast<std::size_t>(angles_per_ring) +
              static_cast<std::size_t>(boundary_angles));
  const double two_pi = 2.0 * std::numbers::pi;
  for (double r : radii) {
    for (int k = 0; k < angles_per_ring; ++k) {
      out.push_back(std::polar(r, two_pi * k / angles_per_ring));
    }
  }
  for (int k = 0; k < boundary_angles; ++k) {
    out.push_back(std::polar(1.0, two_pi * k / boundary_angles));
  }
  return out;
}

void summarize_scan(PencilScanReport& report) {
  const int pencils = report.n - 1;
  report.per_index_minimum.assign(static_cast<std::size_t>(std::max(pencils, 0)),
                                  std::numeric_limits<double>::infinity());
  report.minimum = std::numeric_limits<double>::infinity();
  for (const auto& sample : report.samples) {
    auto& slot = report.per_index_minimum[static_cast<std::size_t>(sample.index - 1)];
    if (sample.value < slot) slot = sample.value;
    if (sample.value < report.minimum) {
      report.minimum = sample.value;
      report.argmin_index = sample.index;
      report.argmin_alpha = sample.alpha;
    }
  }
}

}  // namespace gammakit
