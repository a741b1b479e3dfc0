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

#include "gammakit/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gammakit/errors.hpp"
#include "gammakit/linalg.hpp"
#include "gammakit/parallel.hpp"
#include "gammakit/random.hpp"

namespace gammakit {

namespace {

Complex int_power(Complex base, int exponent) {
  Complex out = 1.0;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

void check_pencil_arguments(const OperatorTuple& tuple, int i, Complex alpha) {
  if (i < 1 || i >= tuple.n()) {
    throw InvalidArgument("pencil index " + std::to_string(i) + " out of range");
  }
  if (std::abs(alpha) > 1.0 + 1e-12) {
    throw InvalidArgument("pencil requires |alpha| <= 1");
  }
}

}  // namespace

double commutativity_residual(const std::vector<Matrix>& family) {
  std::vector<double> norms;
  norms.reserve(family.size());
  for (const Matrix& m : family) norms.push_back(spectral_norm(m));
  double worst = 0.0;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const Matrix commutator = family[a] * family[b] - family[b] * family[a];
      worst = std::max(worst,
                       spectral_norm(commutator) / (1.0 + norms[a] * norms[b]));
    }
  }
  return worst;
}

OperatorTuple::OperatorTuple(std::vector<Matrix> s, Matrix p, Commutativity policy)
    : s_(std::move(s)), p_(std::move(p)) {
  if (s_.empty()) throw InvalidDimension("an operator tuple needs n >= 2");
  const Eigen::Index dim = p_.rows();
  if (dim < 1 || p_.cols() != dim) {
    throw InvalidDimension("P must be a non-empty square matrix");
  }
  for (const Matrix& m : s_) {
    if (m.rows() != dim || m.cols() != dim) {
      throw InvalidDimension("all matrices of a tuple must share one square size");
    }
  }
  for (int k = 1; k <= n(); ++k) {
    if (!coordinate(k).allFinite()) {
      throw InvalidArgument("tuple matrices must have finite entries");
    }
  }
  measure();
  if (policy == Commutativity::kEnforce &&
      !(commutativity_residual_ <= kCommutativityTol)) {
    throw InvalidArgument("tuple does not commute (residual " +
                          std::to_string(commutativity_residual_) + ")");
  }
}

void OperatorTuple::measure() {
  std::vector<Matrix> family(s_);
  family.push_back(p_);
  commutativity_residual_ = gammakit::commutativity_residual(family);
  scale_ = 1.0;
  for (const Matrix& m : family) scale_ = std::max(scale_, spectral_norm(m));
}

OperatorTuple OperatorTuple::from_point(const GammaPoint& point) {
  std::vector<Matrix> s;
  for (const Complex& v : point.s()) s.push_back(Matrix::Constant(1, 1, v));
  return OperatorTuple(std::move(s), Matrix::Constant(1, 1, point.p()));
}

OperatorTuple OperatorTuple::empty(int n) {
  if (n < 2) throw InvalidDimension("an operator tuple needs n >= 2");
  OperatorTuple out;
  out.s_.assign(static_cast<std::size_t>(n - 1), Matrix(0, 0));
  out.p_ = Matrix(0, 0);
  return out;
}

const Matrix& OperatorTuple::S(int i) const {
  if (i < 1 || i >= n()) {
    throw InvalidArgument("S index " + std::to_string(i) + " out of range");
  }
  return s_[static_cast<std::size_t>(i - 1)];
}

const Matrix& OperatorTuple::coordinate(int k) const {
  if (k == n()) return p_;
  return S(k);
}

OperatorTuple OperatorTuple::conjugated(const Matrix& unitary) const {
  std::vector<Matrix> s;
  for (const Matrix& m : s_) s.push_back(unitary * m * unitary.adjoint());
  return OperatorTuple(std::move(s), unitary * p_ * unitary.adjoint(),
                       Commutativity::kRecord);
}

OperatorTuple OperatorTuple::compressed(const Matrix& basis) const {
  if (basis.cols() == 0) return empty(n());
  std::vector<Matrix> s;
  for (const Matrix& m : s_) s.push_back(basis.adjoint() * m * basis);
  return OperatorTuple(std::move(s), basis.adjoint() * p_ * basis,
                       Commutativity::kRecord);
}

Matrix operator_pencil(const OperatorTuple& tuple, int i, Complex alpha) {
  check_pencil_arguments(tuple, i, alpha);
  const int n = tuple.n();
  const double nn = static_cast<double>(n);
  const Eigen::Index dim = tuple.dim();
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix a = int_power(alpha, i) * tuple.S(i);
  const Matrix b = int_power(alpha, n - i) * tuple.S(n - i);
  const Matrix q = int_power(alpha, n) * tuple.P();
  const Matrix left = nn * identity - a;
  const Matrix right = nn * q - b;
  return left.adjoint() * left - right.adjoint() * right;
}

Matrix operator_pencil_expanded(const OperatorTuple& tuple, int i, Complex alpha) {
  check_pencil_arguments(tuple, i, alpha);
  const int n = tuple.n();
  const double nn = static_cast<double>(n);
  const Eigen::Index dim = tuple.dim();
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix a = int_power(alpha, i) * tuple.S(i);
  const Matrix b = int_power(alpha, n - i) * tuple.S(n - i);
  const Matrix q = int_power(alpha, n) * tuple.P();
  const Matrix cross = a - b.adjoint() * q;
  return nn * nn * (identity - q.adjoint() * q) + (a.adjoint() * a - b.adjoint() * b) -
         nn * cross - nn * cross.adjoint();
}

PencilScanReport pencil_min_eig_scan(const OperatorTuple& tuple, const AlphaGrid& grid) {
  const std::vector<Complex> alphas = grid.samples();
  const int n = tuple.n();
  const double nn = static_cast<double>(n);
  const Eigen::Index dim = tuple.dim();
  const auto pencils = static_cast<std::size_t>(n - 1);

  // Alpha-independent pieces: with r = |alpha|,
  //   Phi_i = n^2 (I - r^{2n} P*P) + r^{2i} S_i*S_i - r^{2(n-i)} S_{n-i}*S_{n-i}
  //           - n (X + X*),   X = alpha^i (S_i - r^{2(n-i)} S_{n-i}* P).
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix gram_p = tuple.P().adjoint() * tuple.P();
  std::vector<Matrix> gram(static_cast<std::size_t>(n));
  std::vector<Matrix> cross(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    gram[static_cast<std::size_t>(i)] = tuple.S(i).adjoint() * tuple.S(i);
    cross[static_cast<std::size_t>(i)] = tuple.S(n - i).adjoint() * tuple.P();
  }

  PencilScanReport report;
  report.n = n;
  report.operator_level = true;
  report.samples.resize(alphas.size() * pencils);
  parallel_for(alphas.size(), [&](std::size_t a) {
    const Complex alpha = alphas[a];
    const double r2 = std::norm(alpha);
    Matrix phi(dim, dim);
    for (int i = 1; i < n; ++i) {
      const double r2i = std::pow(r2, i);
      const double r2j = std::pow(r2, n - i);
      const double r2n = std::pow(r2, n);
      const Matrix x =
          int_power(alpha, i) *
          (tuple.S(i) - r2j * cross[static_cast<std::size_t>(i)]);
      phi = nn * nn * (identity - r2n * gram_p) +
            r2i * gram[static_cast<std::size_t>(i)] -
            r2j * gram[static_cast<std::size_t>(n - i)] - nn * (x + x.adjoint());
      PencilSample& sample = report.samples[a * pencils + static_cast<std::size_t>(i - 1)];
      sample.index = i;
      sample.alpha = alpha;
      sample.value = hermitian_min_eigenvalue(phi);
      sample.modulus_lhs = std::nan("");
      sample.modulus_rhs = std::nan("");
    }
  });
  summarize_scan(report);
  return report;
}

JointSpectrum joint_spectrum(const OperatorTuple& tuple, std::uint64_t seed) {
  const int n = tuple.n();
  const Eigen::Index dim = tuple.dim();
  JointSpectrum out;
  if (dim == 0) return out;
  const double scale = tuple.scale();

  double best_residual = 0.0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    Matrix combination = Matrix::Zero(dim, dim);
    for (int k = 1; k <= n; ++k) combination += rng.complex_normal() * tuple.coordinate(k);

    Matrix basis;
    if (dim == 1) {
      basis = Matrix::Identity(1, 1);
    } else {
      Eigen::ComplexSchur<Matrix> schur(combination, true);
      if (schur.info() != Eigen::Success) continue;
      basis = schur.matrixU();
    }

    std::vector<Matrix> triangular;
    double residual = 0.0;
    for (int k = 1; k <= n; ++k) {
      Matrix t = basis.adjoint() * tuple.coordinate(k) * basis;
      double lower = 0.0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = j + 1; i < dim; ++i) lower += std::norm(t(i, j));
      }
      residual = std::max(residual, std::sqrt(lower) / scale);
      triangular.push_back(std::move(t));
    }
    out.attempts = attempt + 1;
    best_residual = attempt == 0 ? residual : std::min(best_residual, residual);
    if (residual <= 1e-8) {
      out.residual = residual;
      out.points.assign(static_cast<std::size_t>(dim), {});
      for (Eigen::Index j = 0; j < dim; ++j) {
        auto& point = out.points[static_cast<std::size_t>(j)];
        for (int k = 1; k <= n; ++k) {
          point.push_back(triangular[static_cast<std::size_t>(k - 1)](j, j));
        }
      }
      return out;
    }
  }
  throw DegenerateCombination(
      "no random combination triangularized the tuple", best_residual);
}

std::vector<GammaPoint> joint_spectrum_points(const JointSpectrum& spectrum) {
  std::vector<GammaPoint> out;
  out.reserve(spectrum.points.size());
  for (const auto& coords : spectrum.points) {
    out.emplace_back(std::vector<Complex>(coords.begin(), coords.end() - 1),
                     coords.back());
  }
  return out;
}

GammaUnitaryVerdict is_gamma_unitary(const OperatorTuple& tuple, double tol) {
  GammaUnitaryVerdict verdict;
  const int n = tuple.n();
  const Eigen::Index dim = tuple.dim();
  if (dim == 0) {
    verdict.verdict = true;
    return verdict;
  }
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix& p = tuple.P();
  verdict.unitarity_residual =
      std::max(spectral_norm(p.adjoint() * p - identity),
               spectral_norm(p * p.adjoint() - identity));
  for (int i = 1; i < n; ++i) {
    verdict.symmetry_residual =
        std::max(verdict.symmetry_residual,
                 spectral_norm(tuple.S(i) - tuple.S(n - i).adjoint() * p) / tuple.scale());
  }

  if (verdict.unitarity_residual > tol) {
    verdict.failed_check = "unitarity";
    return verdict;
  }
  if (verdict.symmetry_residual > tol) {
    verdict.failed_check = "symmetry";
    return verdict;
  }

  // The joint spectrum of the scaled (n-1)-tuple is the coordinatewise scaling
  // of the joint spectrum of (S_1, ..., S_{n-1}).
  const JointSpectrum spectrum = joint_spectrum(tuple);
  verdict.spectrum_residual = spectrum.residual;
  const double membership_tol = std::max(tol, kDefaultMembershipTol);
  verdict.spectral_margin = std::numeric_limits<double>::infinity();
  for (const auto& point : spectrum.points) {
    std::vector<Complex> scaled(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      scaled[static_cast<std::size_t>(i - 1)] =
          static_cast<double>(n - i) / n * point[static_cast<std::size_t>(i - 1)];
    }
    double margin = 0.0;
    if (n == 2) {
      margin = 1.0 - std::abs(scaled[0]);
    } else {
      const GammaPoint reduced(std::vector<Complex>(scaled.begin(), scaled.end() - 1),
                               scaled.back());
      margin = membership(reduced, Region::kClosed, membership_tol).margin;
    }
    verdict.spectral_margin = std::min(verdict.spectral_margin, margin);
  }
  if (verdict.spectral_margin < -membership_tol) {
    verdict.failed_check = "scaled_spectrum";
    return verdict;
  }
  verdict.verdict = true;
  return verdict;
}

OperatorTuple rotate_tuple(const OperatorTuple& tuple, Complex omega) {
  if (std::abs(std::abs(omega) - 1.0) > kUnimodularTol) {
    throw InvalidArgument("rotation requires a unimodular omega");
  }
  if (tuple.dim() == 0) return tuple;
  std::vector<Matrix> s;
  Complex power = 1.0;
  for (const Matrix& m : tuple.S_list()) {
    power *= omega;
    s.push_back(power * m);
  }
  power *= omega;
  return OperatorTuple(std::move(s), power * tuple.P(),
                       OperatorTuple::Commutativity::kRecord);
}

}  // namespace gammakit
