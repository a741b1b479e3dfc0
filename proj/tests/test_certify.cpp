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

#include "gammakit/certify.hpp"
#include "gammakit/errors.hpp"
#include "gammakit/generators.hpp"
#include "gammakit/linalg.hpp"

using namespace gammakit;

namespace {

CertifyOptions fast_options() {
  CertifyOptions options;
  options.grid = AlphaGrid::uniform(4, 64);
  options.vn_trials = 4;
  options.vn_samples = 1000;
  return options;
}

Matrix diag(std::initializer_list<Complex> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (const Complex& x : values) v(k++) = x;
  return v.asDiagonal();
}

}  // namespace

TEST_CASE("certify: normal contractions are exact") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      for (Model model : {Model::kNormalInterior, Model::kNormalBoundary}) {
        const Instance instance = generate({seed, n, 4, model});
        const CertificateReport report = certify_gamma_contraction(instance.tuple, fast_options());
        CHECK(report.verdict == Verdict::kExactGammaContraction);
        CHECK(report.normal);
        CHECK_FALSE(report.failed_check.has_value());
        CHECK(report.checks_passed.size() == 5);
      }
    }
  }
}

TEST_CASE("certify: single-contraction models pass every necessary check") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      for (Model model : {Model::kSingleContractionBlaschke, Model::kCnuJordan}) {
        const Instance instance = generate({seed, n, 4, model});
        const CertificateReport report = certify_gamma_contraction(instance.tuple, fast_options());
        CHECK(report.verdict != Verdict::kFailed);
      }
    }
  }
}

TEST_CASE("certify: named failures") {
  const OperatorTuple big({diag({2.5, 0.0})}, diag({0.0, 0.0}));
  const CertificateReport norm = certify_gamma_contraction(big, fast_options());
  CHECK(norm.verdict == Verdict::kFailed);
  CHECK(*norm.failed_check == kCheckNormBounds);

  Matrix a(2, 2), b(2, 2);
  a << 0, 0.5, 0, 0;
  b << 0, 0, 0.5, 0;
  const OperatorTuple noncommuting({a}, b, OperatorTuple::Commutativity::kRecord);
  CHECK(*certify_gamma_contraction(noncommuting, fast_options()).failed_check ==
        kCheckCommutativity);

  for (int n = 2; n <= 5; ++n) {
    const Instance outside = generate({7, n, 3, Model::kOutsidePerturbed});
    REQUIRE_FALSE(outside.truth.gamma_contraction);
    const CertificateReport report = certify_gamma_contraction(outside.tuple, fast_options());
    CHECK(report.verdict == Verdict::kFailed);
  }
}

TEST_CASE("certify: exact tuples with negative middle pencils are not failed") {
  // (1,1,1,0) lies in the closed set for n = 4 but its i = 2 pencil is -8.
  const GammaPoint point = symmetrize(std::vector<Complex>{1.0, 1.0, 1.0, 0.0});
  const CertificateReport report =
      certify_gamma_contraction(OperatorTuple::from_point(point), fast_options());
  CHECK(report.verdict == Verdict::kExactGammaContraction);
  REQUIRE(report.pencil_minimum.has_value());
  CHECK(*report.pencil_minimum < -7.0);
  CHECK(*report.pencil_edge_minimum >= -1e-8);
}

TEST_CASE("property: Gamma-unitary tuples are never failed") {
  Rng rng(40);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 5; ++t) {
      const Instance instance = generate({rng.next(), n, 3, Model::kNormalBoundary});
      REQUIRE(is_gamma_unitary(instance.tuple).verdict);
      CHECK(certify_gamma_contraction(instance.tuple, fast_options()).verdict != Verdict::kFailed);
    }
  }
}

TEST_CASE("property: verdict preserved under 16 rotations") {
  Rng rng(41);
  for (int n = 2; n <= 4; ++n) {
    for (Model model : {Model::kNormalInterior, Model::kSingleContractionBlaschke,
                        Model::kOutsidePerturbed}) {
      const Instance instance = generate({rng.next(), n, 3, model});
      const Verdict base = certify_gamma_contraction(instance.tuple, fast_options()).verdict;
      for (int k = 0; k < 16; ++k) {
        const OperatorTuple rotated = rotate_tuple(instance.tuple, rng.unimodular());
        CHECK(certify_gamma_contraction(rotated, fast_options()).verdict == base);
      }
    }
  }
}

TEST_CASE("certify is deterministic") {
  const Instance instance = generate({3, 3, 4, Model::kSingleContractionBlaschke});
  const CertificateReport a = certify_gamma_contraction(instance.tuple, fast_options());
  const CertificateReport b = certify_gamma_contraction(instance.tuple, fast_options());
  CHECK(*a.pencil_minimum == *b.pencil_minimum);
  REQUIRE(a.vn_results.size() == b.vn_results.size());
  for (std::size_t k = 0; k < a.vn_results.size(); ++k) {
    CHECK(a.vn_results[k].sampled_sup == b.vn_results[k].sampled_sup);
  }
}
