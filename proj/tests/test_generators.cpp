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

#include <doctest.h>

#include <cmath>
#include <set>

#include "gammakit/decomposition.hpp"
#include "gammakit/errors.hpp"
#include "gammakit/generators.hpp"
#include "gammakit/linalg.hpp"
#include "gammakit/serialization.hpp"
#include "oracles.hpp"

using namespace gammakit;

TEST_CASE("Rng is reproducible and streams differ") {
  Rng a(42), b(42), c(mix_seed(42, 1));
  for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
  CHECK(Rng(42).next() != c.next());
  Rng d(1);
  for (int k = 0; k < 1000; ++k) {
    const double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(std::abs(d.unimodular()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(d.in_disc(0.5)) <= 0.5);
    const int i = d.uniform_int(2, 4);
    CHECK(i >= 2);
    CHECK(i <= 4);
  }
}

TEST_CASE("random_unitary is unitary and deterministic") {
  for (Eigen::Index dim : {1, 2, 5, 16}) {
    Rng a(dim), b(dim);
    const Matrix u = random_unitary(dim, a);
    CHECK((u.adjoint() * u - Matrix::Identity(dim, dim)).norm() < 1e-13);
    CHECK((u - random_unitary(dim, b)).norm() == 0.0);
  }
}

TEST_CASE("sample_gamma_point: mode guarantees") {
  Rng rng(6);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 300; ++t) {
      const GammaPoint boundary = sample_gamma_point(n, rng, SampleMode::kBoundary);
      CHECK(std::abs(std::abs(boundary.p()) - 1.0) <= 1e-12);
      CHECK(membership(boundary, Region::kDistinguishedBoundary).inside);

      const GammaPoint interior = sample_gamma_point(n, rng, SampleMode::kInterior);
      CHECK(membership(interior, Region::kClosed).inside);
      CHECK(membership(interior, Region::kOpen).inside);

      double delta = 0.0;
      const GammaPoint outside = sample_gamma_point(n, rng, SampleMode::kOutside, &delta);
      CHECK(delta >= 1e-2);
      CHECK(delta <= 1.0);
      const MembershipVerdict v = membership(outside, Region::kClosed);
      CHECK_FALSE(v.inside);
      CHECK(-v.margin >= delta / 2.0);
    }
  }
}

TEST_CASE("normal_tuple: worked values") {
  const GammaPoint point({Complex(0.3, 0.1), 0.2}, Complex(0.0, 0.05));
  const std::vector<GammaPoint> one{point};
  const OperatorTuple scalar = normal_tuple(one, Matrix::Identity(1, 1));
  for (int k = 1; k <= 3; ++k) CHECK(scalar.coordinate(k)(0, 0) == point.coordinate(k));

  const std::vector<GammaPoint> mismatched{GammaPoint({0.0}, 0.0), GammaPoint({0.0, 0.0}, 0.0)};
  CHECK_THROWS_AS(normal_tuple(mismatched, Matrix::Identity(2, 2)), InvalidArgument);

  Rng rng(2);
  std::vector<GammaPoint> mixed;
  for (int j = 0; j < 5; ++j) {
    mixed.push_back(sample_gamma_point(3, rng, j % 2 ? SampleMode::kBoundary : SampleMode::kInterior));
  }
  const OperatorTuple t = normal_tuple(mixed, random_unitary(5, rng));
  CHECK(canonical_decompose(t).k() == 2);
}

TEST_CASE("single_contraction_model: worked values") {
  Rng rng(9);
  std::vector<MobiusMap> maps{MobiusMap{Complex(0.3, 0.0), 1.0}, MobiusMap::constant(Complex(0.0, 0.5)),
                              MobiusMap{Complex(0.0, -0.2), Complex(0.0, 1.0)}};
  const OperatorTuple at_zero = single_contraction_model(Matrix::Zero(2, 2), maps);
  std::vector<Complex> values;
  for (const MobiusMap& m : maps) values.push_back(m.apply(Complex(0.0)));
  const auto e = oracle::elementary_symmetric(values);
  for (int k = 1; k <= 3; ++k) {
    CHECK((at_zero.coordinate(k) - e[static_cast<std::size_t>(k)] * Matrix::Identity(2, 2)).norm() < 1e-14);
  }

  // J(0) with identity maps: S_i = C(n,i) T^i, P = T^n.
  for (int n = 2; n <= 5; ++n) {
    Matrix t = Matrix::Zero(6, 6);
    for (int r = 0; r < 5; ++r) t(r, r + 1) = 1.0;
    const std::vector<MobiusMap> ids(static_cast<std::size_t>(n), MobiusMap::identity());
    const OperatorTuple model = single_contraction_model(t, ids);
    Matrix power = Matrix::Identity(6, 6);
    double binomial = 1.0;
    for (int i = 1; i < n; ++i) {
      power = power * t;
      binomial = binomial * (n - i + 1) / i;
      CHECK((model.S(i) - binomial * power).norm() < 1e-12);
    }
    CHECK((model.P() - power * t).norm() < 1e-12);
  }

  CHECK_THROWS_AS(single_contraction_model(2.0 * Matrix::Identity(2, 2), maps), InvalidArgument);
}

TEST_CASE("mixed_direct_sum: empty parts and ground truth") {
  Rng rng(5);
  const std::vector<GammaPoint> none;
  const OperatorTuple cnu = single_contraction_model(
      0.95 * random_contraction(3, rng),
      std::vector<MobiusMap>{MobiusMap::identity(), MobiusMap::identity()});
  const DirectSum only_cnu = mixed_direct_sum(none, cnu, random_unitary(3, rng));
  CHECK(only_cnu.k == 0);
  CHECK(canonical_decompose(only_cnu.tuple).k() == 0);

  std::vector<GammaPoint> boundary;
  for (int j = 0; j < 3; ++j) boundary.push_back(sample_gamma_point(2, rng, SampleMode::kBoundary));
  const DirectSum only_unitary = mixed_direct_sum(boundary, OperatorTuple::empty(2), random_unitary(3, rng));
  CHECK(only_unitary.k == 3);
  CHECK(canonical_decompose(only_unitary.tuple).k() == 3);

  const std::vector<GammaPoint> two(boundary.begin(), boundary.begin() + 2);
  const OperatorTuple cnu2 = single_contraction_model(
      0.95 * random_contraction(2, rng),
      std::vector<MobiusMap>{MobiusMap::identity(), MobiusMap{Complex(0.2, 0.1), 1.0}});
  const DirectSum both = mixed_direct_sum(two, cnu2, random_unitary(4, rng));
  CHECK(both.k == 2);
  CHECK(canonical_decompose(both.tuple).k() == 2);
}

TEST_CASE("generate: determinism across every model") {
  for (Model model : kAllModels) {
    CHECK(model_from_name(model_name(model)) == model);
    for (int n = 2; n <= 5; ++n) {
      const GeneratorSpec spec{1234, n, 5, model};
      const Instance a = generate(spec);
      const Instance b = generate(spec);
      CHECK(tuple_to_json(a.tuple).dump() == tuple_to_json(b.tuple).dump());
      CHECK(ground_truth_to_json(a.truth).dump() == ground_truth_to_json(b.truth).dump());
      CHECK(a.tuple.dim() == 5);
      CHECK(a.tuple.n() == n);
    }
  }
  CHECK_THROWS_AS(model_from_name("nope"), InvalidArgument);
  CHECK_THROWS_AS(generate({1, 1, 2, Model::kNormalInterior}), InvalidDimension);
  CHECK_THROWS_AS(generate({1, 2, 0, Model::kNormalInterior}), InvalidDimension);
}

TEST_CASE("generate: coverage of k = 0, k = dim and mixed cases") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance instance = generate({seed, 2, 3, Model::kMixedDirectSum});
    const int k = *instance.truth.expected_k;
    seen.insert(k == 0 ? "zero" : k == 3 ? "full" : "mixed");
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("generate: outside instances fail membership") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance instance = generate({seed, 2 + static_cast<int>(seed % 4), 3, Model::kOutsidePerturbed});
    CHECK_FALSE(instance.truth.gamma_contraction);
    REQUIRE(instance.truth.inflation.has_value());
    bool some_outside = false;
    for (const GammaPoint& point : joint_spectrum_points(joint_spectrum(instance.tuple))) {
      some_outside = some_outside || !membership(point, Region::kClosed).inside;
    }
    CHECK(some_outside);
  }
}
