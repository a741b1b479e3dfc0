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

#include "gammakit/errors.hpp"
#include "gammakit/serialization.hpp"

using namespace gammakit;

TEST_CASE("point JSON round trip and schema") {
  const GammaPoint point({Complex(1.5, -0.25), Complex(0.0, 2.0)}, Complex(0.125, 0.5));
  const Json j = point_to_json(point);
  CHECK(j["schema"] == kPointSchema);
  CHECK(point_from_json(j) == point);
  CHECK(point_from_json(parse_json(j.dump())) == point);

  const Json minimal = parse_json(R"({"n": 2, "s": [[2, 0]], "p": [1, 0]})");
  CHECK(point_from_json(minimal) == GammaPoint({2.0}, 1.0));
}

TEST_CASE("point JSON rejects malformed input") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json(R"({"n": 2, "s": [[2, 0]], "p": [1, 0], "x": 1})")),
                  ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json(R"({"n": 3, "s": [[2, 0]], "p": [1, 0]})")), ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json(R"({"n": 2, "s": [[2, 0]]})")), ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json(R"({"n": 2, "s": [[2]], "p": [1, 0]})")), ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json(R"({"n": 2, "s": [["a", 0]], "p": [1, 0]})")),
                  ParseError);
  CHECK_THROWS_AS(
      point_from_json(parse_json(R"({"schema": "gammakit.tuple/1", "n": 2, "s": [[2, 0]], "p": [1, 0]})")),
      ParseError);
  CHECK_THROWS_AS(point_from_json(parse_json("[1, 2]")), ParseError);
}

TEST_CASE("tuple JSON round trip is bit-exact") {
  for (Model model : kAllModels) {
    const Instance instance = generate({77, 3, 4, model});
    const Json j = tuple_to_json(instance.tuple);
    CHECK(j["schema"] == kTupleSchema);
    const OperatorTuple back =
        tuple_from_json(parse_json(j.dump()), OperatorTuple::Commutativity::kRecord);
    for (int k = 1; k <= 3; ++k) CHECK((back.coordinate(k) - instance.tuple.coordinate(k)).norm() == 0.0);
  }
}

TEST_CASE("tuple JSON rejects malformed input") {
  const char* good = R"({"n": 2, "dim": 1, "S": [[[[1, 0]]]], "P": [[[0.5, 0]]]})";
  CHECK_NOTHROW(tuple_from_json(parse_json(good)));
  CHECK_THROWS_AS(
      tuple_from_json(parse_json(R"({"n": 2, "dim": 1, "S": [[[[1, 0]]]], "P": [[[0.5, 0]]], "Q": 1})")),
      ParseError);
  CHECK_THROWS_AS(tuple_from_json(parse_json(R"({"n": 2, "dim": 2, "S": [[[[1, 0]]]], "P": [[[0.5, 0]]]})")),
                  ParseError);
  CHECK_THROWS_AS(tuple_from_json(parse_json(R"({"n": 3, "dim": 1, "S": [[[[1, 0]]]], "P": [[[0.5, 0]]]})")),
                  ParseError);
  CHECK_THROWS_AS(tuple_from_json(parse_json(R"({"n": 2, "dim": 1, "S": [[[[1, 0]]]]})")), ParseError);
}

TEST_CASE("point check report") {
  const Json inside = point_check_report(GammaPoint({1.0}, 0.5), 1e-9);
  CHECK(inside["schema"] == kPointCheckSchema);
  CHECK(inside["membership"]["closed"]["inside"] == true);
  CHECK(inside["membership"]["open"]["inside"] == true);
  CHECK(inside["costara"]["applicable"] == true);
  CHECK(inside["costara"]["agrees_with_roots"] == true);

  const Json boundary = point_check_report(GammaPoint({2.0}, 1.0), 1e-9);
  CHECK(boundary["membership"]["distinguished_boundary"]["inside"] == true);
  CHECK(boundary["costara"]["applicable"] == false);
}

TEST_CASE("scan CSV carries schema, header and full precision") {
  AlphaGrid grid = AlphaGrid::uniform(1, 4);
  const PencilScanReport scalar = scalar_pencil_scan(GammaPoint({0.0}, 0.0), grid);
  const std::string csv = scan_to_csv(scalar);
  CHECK(csv.rfind("# schema: gammakit.pencil_scan/1\n", 0) == 0);
  CHECK(csv.find("i,re_alpha,im_alpha,phi_value,modulus_lhs,modulus_rhs\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + static_cast<long>(scalar.samples.size()));

  const OperatorTuple zero({Matrix::Zero(2, 2)}, Matrix::Zero(2, 2));
  const std::string op = scan_to_csv(pencil_min_eig_scan(zero, grid));
  CHECK(op.find("i,re_alpha,im_alpha,min_eig\n") != std::string::npos);
}

TEST_CASE("report schemas") {
  const Instance instance = generate({1, 2, 3, Model::kMixedDirectSum});
  CertifyOptions options;
  options.grid = AlphaGrid::uniform(2, 16);
  options.vn_trials = 1;
  options.vn_samples = 1000;
  const Json cert = certificate_to_json(certify_gamma_contraction(instance.tuple, options));
  CHECK(cert["schema"] == kCertificateSchema);
  CHECK(cert["verdict"] == "ExactGammaContraction");

  const DecompositionResult r = canonical_decompose(instance.tuple);
  const Json dec = decomposition_to_json(r);
  CHECK(dec["schema"] == kDecompositionSchema);
  CHECK(dec["k"] == *instance.truth.expected_k);
  CHECK(dec["unitary_part"]["schema"] == kTupleSchema);

  const Json truth = ground_truth_to_json(instance.truth);
  CHECK(truth["schema"] == kGroundTruthSchema);
  CHECK(truth["model"] == "mixed_direct_sum");
}
