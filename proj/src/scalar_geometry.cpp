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

#include "gammakit/scalar_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gammakit/errors.hpp"
#include "gammakit/parallel.hpp"

namespace gammakit {

namespace {

// Coefficients are stored highest degree first.
Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc = 0.0;
  for (const Complex& c : coeffs) acc = acc * z + c;
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  std::vector<Complex> out;
  out.reserve(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    out.push_back(coeffs[k] * static_cast<double>(degree - k));
  }
  return out;
}

// Relative coefficient mismatch between symmetrize(roots) and the point.
double vieta_residual(const std::vector<Complex>& roots, const GammaPoint& point) {
  const GammaPoint back = symmetrize(roots);
  double worst = 0.0;
  for (int k = 1; k <= point.n(); ++k) {
    worst = std::max(worst, std::abs(back.coordinate(k) - point.coordinate(k)));
  }
  return worst / (1.0 + point.norm());
}

void polish_simple_root(const std::vector<Complex>& coeffs,
                        const std::vector<Complex>& dcoeffs, Complex& z) {
  double value = std::abs(horner(coeffs, z));
  for (int step = 0; step < 3 && value > 0.0; ++step) {
    const Complex slope = horner(dcoeffs, z);
    if (slope == Complex(0.0)) return;
    const Complex next = z - horner(coeffs, z) / slope;
    const double next_value = std::abs(horner(coeffs, next));
    if (!(next_value < value)) return;
    z = next;
    value = next_value;
  }
}

// A root of multiplicity m is a simple root of the (m-1)-th derivative.
Complex refine_cluster(const std::vector<Complex>& coeffs, int multiplicity,
                       Complex start) {
  std::vector<Complex> d = coeffs;
  for (int k = 1; k < multiplicity; ++k) d = derivative(d);
  const std::vector<Complex> dd = derivative(d);
  Complex z = start;
  for (int iter = 0; iter < 30; ++iter) {
    const Complex slope = horner(dd, z);
    if (slope == Complex(0.0)) break;
    const Complex step = horner(d, z) / slope;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

GammaPoint::GammaPoint(std::vector<Complex> s, Complex p)
    : s_(std::move(s)), p_(p) {
  if (s_.empty()) {
    throw InvalidDimension("a point of Gamma_n needs n >= 2 coordinates");
  }
}

Complex GammaPoint::s(int i) const {
  if (i < 1 || i >= n()) {
    throw InvalidArgument("s index " + std::to_string(i) + " out of range");
  }
  return s_[static_cast<std::size_t>(i - 1)];
}

Complex GammaPoint::coordinate(int k) const {
  if (k == n()) return p_;
  return s(k);
}

std::vector<Complex> GammaPoint::coordinates() const {
  std::vector<Complex> out(s_);
  out.push_back(p_);
  return out;
}

std::vector<Complex> GammaPoint::fiber_coefficients() const {
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n()) + 1);
  coeffs.push_back(1.0);
  for (int k = 1; k <= n(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    coeffs.push_back(sign * coordinate(k));
  }
  return coeffs;
}

double GammaPoint::norm() const {
  double sum = std::norm(p_);
  for (const Complex& v : s_) sum += std::norm(v);
  return std::sqrt(sum);
}

GammaPoint GammaPoint::scaled(Complex alpha) const {
  std::vector<Complex> s(s_.size());
  Complex power = 1.0;
  for (std::size_t k = 0; k < s_.size(); ++k) {
    power *= alpha;
    s[k] = power * s_[k];
  }
  power *= alpha;
  return GammaPoint(std::move(s), power * p_);
}

const char* region_name(Region region) {
  switch (region) {
    case Region::kClosed:
      return "closed";
    case Region::kOpen:
      return "open";
    case Region::kDistinguishedBoundary:
      return "distinguished_boundary";
  }
  return "unknown";
}

GammaPoint symmetrize(std::span<const Complex> z) {
  const std::size_t n = z.size();
  if (n < 2) throw InvalidDimension("symmetrize needs n >= 2 variables");
  // coeffs[k] is the coefficient of X^{n-k} in prod (X - z_j).
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) coeffs[k] -= z[j] * coeffs[k - 1];
  }
  std::vector<Complex> s(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    s[k - 1] = (k % 2 == 0) ? coeffs[k] : -coeffs[k];
  }
  const Complex p = (n % 2 == 0) ? coeffs[n] : -coeffs[n];
  return GammaPoint(std::move(s), p);
}

std::vector<Complex> fiber_roots(const GammaPoint& point) {
  const int n = point.n();
  const std::vector<Complex> coeffs = point.fiber_coefficients();
  Matrix companion = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[static_cast<std::size_t>(j) + 1];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("companion eigensolver did not converge",
                           companion.norm());
  }
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);

  // Single-linkage clusters of nearby eigenvalues.
  double max_modulus = 0.0;
  for (const Complex& r : roots) max_modulus = std::max(max_modulus, std::abs(r));
  const double link = 1e-3 * (1.0 + max_modulus);
  std::vector<int> label(roots.size());
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(roots[a] - roots[b]) <= link && label[b] != label[a]) {
        const int from = label[b];
        const int to = label[a];
        for (int& l : label) {
          if (l == from) l = to;
        }
      }
    }
  }

  const std::vector<Complex> dcoeffs = derivative(coeffs);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (std::count(label.begin(), label.end(), label[a]) == 1) {
      polish_simple_root(coeffs, dcoeffs, roots[a]);
    }
  }

  double residual = vieta_residual(roots, point);
  std::vector<int> seen;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    const int cluster = label[a];
    if (std::find(seen.begin(), seen.end(), cluster) != seen.end()) continue;
    seen.push_back(cluster);
    const auto multiplicity =
        static_cast<int>(std::count(label.begin(), label.end(), cluster));
    if (multiplicity < 2) continue;
    Complex mean = 0.0;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (label[b] == cluster) mean += roots[b];
    }
    mean /= static_cast<double>(multiplicity);
    const Complex merged = refine_cluster(coeffs, multiplicity, mean);
    std::vector<Complex> candidate = roots;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (label[b] == cluster) candidate[b] = merged;
    }
    const double candidate_residual = vieta_residual(candidate, point);
    if (candidate_residual <= std::max(10.0 * residual, 1e-14)) {
      roots = std::move(candidate);
      residual = candidate_residual;
    }
  }

  if (!(residual <= 1e-9)) {
    throw NumericalFailure("fiber roots do not reproduce the point", residual);
  }
  return roots;
}

MembershipVerdict membership(const GammaPoint& point, Region region, double tol) {
  if (!(tol >= 0.0)) throw InvalidArgument("membership tolerance must be >= 0");
  const std::vector<Complex> roots = fiber_roots(point);
  MembershipVerdict verdict;
  verdict.region = region;
  verdict.min_root_modulus = std::abs(roots.front());
  for (const Complex& r : roots) {
    const double modulus = std::abs(r);
    verdict.max_root_modulus = std::max(verdict.max_root_modulus, modulus);
    verdict.min_root_modulus = std::min(verdict.min_root_modulus, modulus);
    verdict.boundary_deviation =
        std::max(verdict.boundary_deviation, std::abs(modulus - 1.0));
  }
  verdict.margin = 1.0 - verdict.max_root_modulus;
  switch (region) {
    case Region::kClosed:
      verdict.inside = verdict.max_root_modulus <= 1.0 + tol;
      break;
    case Region::kOpen:
      verdict.inside = verdict.max_root_modulus < 1.0 - tol;
      break;
    case Region::kDistinguishedBoundary:
      verdict.inside = verdict.boundary_deviation <= tol;
      break;
  }
  return verdict;
}

GammaPoint rotate_point(const GammaPoint& point, Complex omega) {
  if (std::abs(std::abs(omega) - 1.0) > kUnimodularTol) {
    throw InvalidArgument("rotation requires a unimodular omega");
  }
  return point.scaled(omega);
}

std::optional<std::vector<Complex>> costara_coefficients(const GammaPoint& point) {
  const double p_modulus_sq = std::norm(point.p());
  if (!(p_modulus_sq < 1.0)) return std::nullopt;
  const int n = point.n();
  std::vector<Complex> c(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    c[static_cast<std::size_t>(i - 1)] =
        (point.s(i) - std::conj(point.s(n - i)) * point.p()) / (1.0 - p_modulus_sq);
  }
  return c;
}

namespace {

// Requires |p| < 1.
bool costara_inside(const GammaPoint& point, double tol) {
  const std::vector<Complex> c = *costara_coefficients(point);
  if (point.n() == 2) return std::abs(c[0]) <= 1.0 + tol;
  const GammaPoint reduced(std::vector<Complex>(c.begin(), c.end() - 1), c.back());
  const double p_modulus = std::abs(reduced.p());
  if (p_modulus > 1.0 + tol) return false;
  if (p_modulus >= 1.0) return membership(reduced, Region::kClosed, tol).inside;
  return costara_inside(reduced, tol);
}

}  // namespace

std::optional<bool> costara_membership(const GammaPoint& point, double tol) {
  if (!(std::abs(point.p()) < 1.0)) return std::nullopt;
  return costara_inside(point, tol);
}

double scalar_pencil_value(const GammaPoint& point, int i) {
  const int n = point.n();
  if (i < 1 || i >= n) {
    throw InvalidArgument("pencil index " + std::to_string(i) + " out of range");
  }
  const double nn = static_cast<double>(n);
  const Complex si = point.s(i);
  const Complex sj = point.s(n - i);
  const Complex p = point.p();
  const Complex value = nn * nn * (1.0 - std::norm(p)) + (std::norm(si) - std::norm(sj)) -
                        nn * (si - std::conj(sj) * p) -
                        nn * (std::conj(si) - std::conj(p) * sj);
  return value.real();
}

double scalar_pencil_factored(const GammaPoint& point, int i) {
  const int n = point.n();
  if (i < 1 || i >= n) {
    throw InvalidArgument("pencil index " + std::to_string(i) + " out of range");
  }
  const double nn = static_cast<double>(n);
  return std::norm(nn - point.s(i)) - std::norm(nn * point.p() - point.s(n - i));
}

PencilScanReport scalar_pencil_scan(const GammaPoint& point, const AlphaGrid& grid) {
  const std::vector<Complex> alphas = grid.samples();
  const int n = point.n();
  const double nn = static_cast<double>(n);
  const auto pencils = static_cast<std::size_t>(n - 1);

  PencilScanReport report;
  report.n = n;
  report.operator_level = false;
  report.samples.resize(alphas.size() * pencils);
  std::vector<double> discrepancy(report.samples.size(), 0.0);
  std::vector<char> disagrees(report.samples.size(), 0);

  parallel_for(alphas.size(), [&](std::size_t a) {
    const GammaPoint q = point.scaled(alphas[a]);
    for (int i = 1; i < n; ++i) {
      const std::size_t slot = a * pencils + static_cast<std::size_t>(i - 1);
      PencilSample& sample = report.samples[slot];
      sample.index = i;
      sample.alpha = alphas[a];
      sample.value = scalar_pencil_value(q, i);
      sample.modulus_lhs = std::abs(nn * q.p() - q.s(n - i));
      sample.modulus_rhs = std::abs(nn - q.s(i));
      const double scale = nn * nn + std::norm(q.s(i)) + std::norm(q.s(n - i)) +
                           nn * nn * std::norm(q.p());
      const double gap = sample.modulus_rhs * sample.modulus_rhs -
                         sample.modulus_lhs * sample.modulus_lhs;
      discrepancy[slot] = std::abs(sample.value - gap) / scale;
      const bool pencil_ok = sample.value >= 0.0;
      const bool modulus_ok = sample.modulus_lhs <= sample.modulus_rhs;
      disagrees[slot] =
          (pencil_ok != modulus_ok && std::abs(sample.value) > 1e-12 * scale) ? 1 : 0;
    }
  });

  for (std::size_t k = 0; k < report.samples.size(); ++k) {
    report.equivalence_max_discrepancy =
        std::max(report.equivalence_max_discrepancy, discrepancy[k]);
    report.verdict_disagreements += disagrees[k];
  }
  summarize_scan(report);
  if (report.verdict_disagreements > 0 || report.equivalence_max_discrepancy > 1e-12) {
    throw NumericalFailure("pencil value and modulus inequality disagree",
                           report.equivalence_max_discrepancy);
  }
  return report;
}

}  // namespace gammakit
