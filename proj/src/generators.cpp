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

#include "gammakit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gammakit/errors.hpp"
#include "gammakit/linalg.hpp"

namespace gammakit {

const char* model_name(Model model) {
  switch (model) {
    case Model::kNormalInterior:
      return "normal_interior";
    case Model::kNormalBoundary:
      return "normal_boundary";
    case Model::kMixedDirectSum:
      return "mixed_direct_sum";
    case Model::kSingleContractionBlaschke:
      return "single_contraction_blaschke";
    case Model::kCnuJordan:
      return "cnu_jordan";
    case Model::kOutsidePerturbed:
      return "outside_perturbed";
  }
  return "unknown";
}

Model model_from_name(const std::string& name) {
  for (Model model : kAllModels) {
    if (name == model_name(model)) return model;
  }
  throw InvalidArgument("unknown generator model '" + name + "'");
}

GammaPoint sample_gamma_point(int n, Rng& rng, SampleMode mode, double* delta_out) {
  if (n < 2) throw InvalidDimension("sample_gamma_point needs n >= 2");
  std::vector<Complex> z(static_cast<std::size_t>(n));
  if (mode == SampleMode::kBoundary) {
    for (Complex& v : z) v = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return symmetrize(z);
  }
  for (Complex& v : z) v = rng.in_disc(1.0 - 1e-3);
  if (mode == SampleMode::kOutside) {
    const double delta = rng.uniform(1e-2, 1.0);
    auto largest = std::max_element(z.begin(), z.end(), [](Complex a, Complex b) {
      return std::abs(a) < std::abs(b);
    });
    const double modulus = std::abs(*largest);
    const Complex direction = modulus > 0.0 ? *largest / modulus : Complex(1.0);
    *largest = (1.0 + delta) * direction;
    if (delta_out != nullptr) *delta_out = delta;
  }
  return symmetrize(z);
}

OperatorTuple normal_tuple(std::span<const GammaPoint> points, const Matrix& unitary) {
  if (points.empty()) throw InvalidDimension("normal_tuple needs at least one point");
  const int n = points.front().n();
  const auto dim = static_cast<Eigen::Index>(points.size());
  if (unitary.rows() != dim || unitary.cols() != dim) {
    throw InvalidDimension("unitary size does not match the number of points");
  }
  std::vector<Matrix> diagonals(static_cast<std::size_t>(n), Matrix::Zero(dim, dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    const GammaPoint& point = points[static_cast<std::size_t>(j)];
    if (point.n() != n) throw InvalidArgument("points of normal_tuple must share n");
    for (int k = 1; k <= n; ++k) {
      diagonals[static_cast<std::size_t>(k - 1)](j, j) = point.coordinate(k);
    }
  }
  std::vector<Matrix> s;
  for (int k = 1; k < n; ++k) {
    s.push_back(unitary * diagonals[static_cast<std::size_t>(k - 1)] * unitary.adjoint());
  }
  return OperatorTuple(std::move(s), unitary * diagonals.back() * unitary.adjoint());
}

Complex MobiusMap::apply(Complex z) const {
  if (is_constant) return value;
  return rotation * (z - a) / (1.0 - std::conj(a) * z);
}

Matrix MobiusMap::apply(const Matrix& t) const {
  const Eigen::Index dim = t.rows();
  const Matrix identity = Matrix::Identity(dim, dim);
  if (is_constant) return value * identity;
  const Matrix denominator = identity - std::conj(a) * t;
  // (T - a)(I - conj(a) T)^{-1}; the factors commute.
  const Matrix numerator = t - a * identity;
  return rotation * denominator.partialPivLu().solve(numerator);
}

OperatorTuple single_contraction_model(const Matrix& t, std::span<const MobiusMap> maps) {
  if (t.rows() != t.cols() || t.rows() == 0) {
    throw InvalidDimension("T must be a non-empty square matrix");
  }
  if (spectral_norm(t) > 1.0 + 1e-12) throw InvalidArgument("T is not a contraction");
  if (maps.size() < 2) throw InvalidDimension("need n >= 2 maps");
  for (const MobiusMap& f : maps) {
    if (f.is_constant ? std::abs(f.value) > 1.0 : std::abs(f.a) >= 1.0) {
      throw InvalidArgument("Mobius parameters must lie in the disc");
    }
  }
  const Eigen::Index dim = t.rows();
  const std::size_t n = maps.size();
  // e[k] = k-th elementary symmetric function of the matrices seen so far.
  std::vector<Matrix> e(n + 1, Matrix::Zero(dim, dim));
  e[0] = Matrix::Identity(dim, dim);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix fj = maps[j].apply(t);
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += fj * e[k - 1];
  }
  std::vector<Matrix> s(e.begin() + 1, e.begin() + static_cast<std::ptrdiff_t>(n));
  return OperatorTuple(std::move(s), e[n]);
}

DirectSum mixed_direct_sum(std::span<const GammaPoint> unitary_points,
                           const OperatorTuple& cnu_model, const Matrix& unitary) {
  const auto k = static_cast<Eigen::Index>(unitary_points.size());
  const Eigen::Index dim = k + cnu_model.dim();
  if (dim == 0) throw InvalidDimension("direct sum of two empty tuples");
  if (unitary.rows() != dim || unitary.cols() != dim) {
    throw InvalidDimension("unitary size does not match the direct sum");
  }
  const int n = cnu_model.n();
  std::vector<Matrix> blocks(static_cast<std::size_t>(n), Matrix(0, 0));
  if (k > 0) {
    const OperatorTuple normal =
        normal_tuple(unitary_points, Matrix::Identity(k, k));
    if (normal.n() != n) throw InvalidArgument("summands must share n");
    for (int c = 1; c <= n; ++c) blocks[static_cast<std::size_t>(c - 1)] = normal.coordinate(c);
  }
  std::vector<Matrix> s;
  for (int c = 1; c < n; ++c) {
    const Matrix sum = block_diagonal(blocks[static_cast<std::size_t>(c - 1)],
                                      cnu_model.dim() > 0 ? cnu_model.coordinate(c) : Matrix(0, 0));
    s.push_back(unitary * sum * unitary.adjoint());
  }
  const Matrix p = block_diagonal(blocks.back(),
                                  cnu_model.dim() > 0 ? cnu_model.P() : Matrix(0, 0));
  return {OperatorTuple(std::move(s), unitary * p * unitary.adjoint()),
          static_cast<int>(k)};
}

namespace {

std::vector<MobiusMap> random_maps(int n, Rng& rng, double max_a) {
  std::vector<MobiusMap> maps;
  for (int j = 0; j < n; ++j) {
    MobiusMap f;
    f.a = rng.in_disc(max_a);
    f.rotation = rng.unimodular();
    maps.push_back(f);
  }
  return maps;
}

Matrix jordan_contraction(Eigen::Index dim, Rng& rng) {
  const Complex lambda = rng.in_disc(0.6);
  Matrix j = lambda * Matrix::Identity(dim, dim);
  for (Eigen::Index i = 0; i + 1 < dim; ++i) j(i, i + 1) = 1.0;
  const double norm = spectral_norm(j);
  return norm > 0.0 ? Matrix(0.95 / norm * j) : j;
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 2) throw InvalidDimension("generator needs n >= 2");
  if (spec.dim < 1) throw InvalidDimension("generator needs dim >= 1");
  const std::uint64_t stream = static_cast<std::uint64_t>(spec.model) * 0x10000ULL +
                               static_cast<std::uint64_t>(spec.n) * 0x100ULL +
                               static_cast<std::uint64_t>(spec.dim);
  Rng rng(mix_seed(spec.seed, stream));
  const int n = spec.n;
  const Eigen::Index dim = spec.dim;

  GroundTruth truth;
  truth.spec = spec;

  switch (spec.model) {
    case Model::kNormalInterior:
    case Model::kNormalBoundary:
    case Model::kOutsidePerturbed: {
      const SampleMode mode = spec.model == Model::kNormalBoundary ? SampleMode::kBoundary
                                                                   : SampleMode::kInterior;
      std::vector<GammaPoint> points;
      for (Eigen::Index j = 0; j < dim; ++j) points.push_back(sample_gamma_point(n, rng, mode));
      if (spec.model == Model::kOutsidePerturbed) {
        double delta = 0.0;
        const auto slot = static_cast<std::size_t>(rng.uniform_int(0, spec.dim - 1));
        points[slot] = sample_gamma_point(n, rng, SampleMode::kOutside, &delta);
        truth.inflation = delta;
        truth.gamma_contraction = false;
      } else {
        truth.expected_k = spec.model == Model::kNormalBoundary ? spec.dim : 0;
      }
      const Matrix u = random_unitary(dim, rng);
      truth.spectrum = points;
      return {normal_tuple(points, u), truth};
    }
    case Model::kMixedDirectSum: {
      const int k = rng.uniform_int(0, spec.dim);
      std::vector<GammaPoint> points;
      for (int j = 0; j < k; ++j) points.push_back(sample_gamma_point(n, rng, SampleMode::kBoundary));
      OperatorTuple cnu = OperatorTuple::empty(n);
      if (spec.dim - k > 0) {
        const Matrix t = 0.95 * random_contraction(spec.dim - k, rng);
        const std::vector<MobiusMap> maps = random_maps(n, rng, 0.5);
        cnu = single_contraction_model(t, maps);
      }
      const Matrix u = random_unitary(dim, rng);
      DirectSum sum = mixed_direct_sum(points, cnu, u);
      truth.expected_k = sum.k;
      truth.spectrum = points;
      return {std::move(sum.tuple), truth};
    }
    case Model::kSingleContractionBlaschke: {
      const Matrix t = random_contraction(dim, rng);
      const std::vector<MobiusMap> maps = random_maps(n, rng, 0.9);
      return {single_contraction_model(t, maps), truth};
    }
    case Model::kCnuJordan: {
      const Matrix t = jordan_contraction(dim, rng);
      const std::vector<MobiusMap> maps = random_maps(n, rng, 0.5);
      truth.expected_k = 0;
      return {single_contraction_model(t, maps), truth};
    }
  }
  throw InvalidArgument("unhandled generator model");
}

}  // namespace gammakit
