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
#include <span>
#include <string>
#include <vector>

#include "gammakit/operator_core.hpp"
#include "gammakit/random.hpp"
#include "gammakit/scalar_geometry.hpp"

namespace gammakit {

enum class Model {
  kNormalInterior,
  kNormalBoundary,
  kMixedDirectSum,
  kSingleContractionBlaschke,
  kCnuJordan,
  kOutsidePerturbed,
};

inline constexpr Model kAllModels[] = {
    Model::kNormalInterior,  Model::kNormalBoundary,
    Model::kMixedDirectSum,  Model::kSingleContractionBlaschke,
    Model::kCnuJordan,       Model::kOutsidePerturbed,
};

const char* model_name(Model model);
/// Throws InvalidArgument for unknown names.
Model model_from_name(const std::string& name);

struct GeneratorSpec {
  std::uint64_t seed = 0;
  int n = 2;
  int dim = 1;
  Model model = Model::kNormalInterior;
};

struct GroundTruth {
  GeneratorSpec spec;
  bool gamma_contraction = true;
  /// Dimension of the maximal unitary subspace when it is known by
  /// construction.
  std::optional<int> expected_k;
  /// Joint spectrum of the normal (sub)tuple when it is known.
  std::vector<GammaPoint> spectrum;
  /// For outside_perturbed: the radial inflation applied to one root.
  std::optional<double> inflation;
};

struct Instance {
  OperatorTuple tuple;
  GroundTruth truth;
};

/// Deterministic in the spec: the same spec yields bit-identical matrices.
Instance generate(const GeneratorSpec& spec);

enum class SampleMode { kInterior, kBoundary, kOutside };

/// interior: symmetrization of roots with |z| <= 1 - 1e-3;
/// boundary: roots e^{i theta} exactly unimodular in construction;
/// outside: an interior sample whose largest root is moved radially to modulus
/// 1 + delta, delta in [1e-2, 1]. `delta_out` receives delta when given.
GammaPoint sample_gamma_point(int n, Rng& rng, SampleMode mode,
                              double* delta_out = nullptr);

/// U diag(points) U*: a normal commuting tuple with the points as its joint
/// spectrum.
OperatorTuple normal_tuple(std::span<const GammaPoint> points, const Matrix& unitary);

/// z -> rotation * (z - a) / (1 - conj(a) z) with |a| < 1, or a constant.
struct MobiusMap {
  Complex a = 0.0;
  Complex rotation = 1.0;
  bool is_constant = false;
  Complex value = 0.0;

  static MobiusMap identity() { return {}; }
  static MobiusMap constant(Complex c) { return {0.0, 1.0, true, c}; }

  Complex apply(Complex z) const;
  /// Evaluated at a matrix with ||T|| <= 1.
  Matrix apply(const Matrix& t) const;
};

/// Symmetrization of (f_1(T), ..., f_n(T)): a Gamma_n-contraction by von
/// Neumann's inequality for the single contraction T. Throws
/// InvalidArgument when ||T|| > 1.
OperatorTuple single_contraction_model(const Matrix& t, std::span<const MobiusMap> maps);

struct DirectSum {
  OperatorTuple tuple;
  int k = 0;
};

/// U (normal(unitary_points) (+) cnu_model) U*; k = number of unitary points.
/// Either summand may be empty (cnu_model with dim 0).
DirectSum mixed_direct_sum(std::span<const GammaPoint> unitary_points,
                           const OperatorTuple& cnu_model, const Matrix& unitary);

}  // namespace gammakit
