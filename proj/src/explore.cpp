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

#include "gammakit/explore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gammakit/errors.hpp"
#include "gammakit/parallel.hpp"
#include "gammakit/random.hpp"

namespace gammakit {

ExploreReport explore(const ExploreOptions& options) {
  if (options.budget < 1) throw InvalidArgument("explore budget must be >= 1");
  if (options.n < 2) throw InvalidDimension("explore needs n >= 2");
  const AlphaGrid dense = options.grid.refined(2);
  Rng rng(options.seed);
  ExploreReport report;
  for (int t = 0; t < options.budget; ++t) {
    std::vector<Complex> roots(static_cast<std::size_t>(options.n));
    for (Complex& z : roots) z = rng.in_disc(1.2);
    const double delta = 1e-4 * std::pow(5e3, rng.uniform());
    roots[0] = std::polar(1.0 + delta, 2.0 * std::numbers::pi * rng.uniform());
    const GammaPoint point = symmetrize(roots);
    ++report.sampled;

    const MembershipVerdict verdict = membership(point, Region::kClosed, options.tol);
    if (verdict.inside) continue;
    ++report.outside;
    const PencilScanReport scan = scalar_pencil_scan(point, options.grid);
    if (scan.minimum < 0.0) continue;
    ++report.pencil_nonnegative;
    const PencilScanReport recheck = scalar_pencil_scan(point, dense);
    if (recheck.minimum < 0.0) {
      ++report.dropped_on_refinement;
      continue;
    }
    report.candidates.push_back({point, verdict.margin, scan.minimum, recheck.minimum});
  }
  return report;
}

std::vector<SliceRow> region_slice(const RegionSliceOptions& options) {
  const int n = options.base.n();
  if (n != 2 && n != 3) throw InvalidDimension("region slices support n = 2 or 3");
  if (options.vary < 1 || options.vary > n) {
    throw InvalidArgument("varied coordinate index out of range");
  }
  if (options.resolution < 2) throw InvalidArgument("slice resolution must be >= 2");
  const double extent = options.extent > 0.0 ? options.extent : n + 0.5;
  const int res = options.resolution;
  const std::vector<Complex> alphas = options.grid.samples();
  std::vector<SliceRow> rows(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int row = static_cast<int>(idx) / res;
    const int col = static_cast<int>(idx) % res;
    const double im = extent - 2.0 * extent * row / (res - 1);
    const double re = -extent + 2.0 * extent * col / (res - 1);
    std::vector<Complex> coords = options.base.coordinates();
    coords[static_cast<std::size_t>(options.vary - 1)] = Complex(re, im);
    const GammaPoint point(std::vector<Complex>(coords.begin(), coords.end() - 1),
                           coords.back());
    SliceRow& out = rows[idx];
    out.re = re;
    out.im = im;
    out.member = membership(point, Region::kClosed, options.tol).inside;
    double minimum = std::numeric_limits<double>::infinity();
    for (const Complex& alpha : alphas) {
      const GammaPoint q = point.scaled(alpha);
      for (int i = 1; i < n; ++i) minimum = std::min(minimum, scalar_pencil_value(q, i));
    }
    out.min_pencil = minimum;
  });
  return rows;
}

}  // namespace gammakit
