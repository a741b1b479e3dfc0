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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gammakit/alpha_grid.hpp"
#include "gammakit/certify.hpp"
#include "gammakit/decomposition.hpp"
#include "gammakit/explore.hpp"
#include "gammakit/generators.hpp"
#include "gammakit/operator_core.hpp"
#include "gammakit/scalar_geometry.hpp"

namespace gammakit {

using Json = nlohmann::json;

inline constexpr const char* kPointSchema = "gammakit.point/1";
inline constexpr const char* kTupleSchema = "gammakit.tuple/1";
inline constexpr const char* kPointCheckSchema = "gammakit.point_check/1";
inline constexpr const char* kCertificateSchema = "gammakit.certificate/1";
inline constexpr const char* kDecompositionSchema = "gammakit.decomposition/1";
inline constexpr const char* kGroundTruthSchema = "gammakit.ground_truth/1";
inline constexpr const char* kScanSchema = "gammakit.pencil_scan/1";
inline constexpr const char* kExploreSchema = "gammakit.explore/1";
inline constexpr const char* kSliceSchema = "gammakit.region_slice/1";

// Complex numbers are [re, im]; matrices are row-major arrays of rows.
Json complex_to_json(Complex z);
Json matrix_to_json(const Matrix& m);

/// {"schema", "n", "s": [[re,im],...], "p": [re,im]}. Parsing rejects unknown
/// fields, a mismatched "schema" and inconsistent n with ParseError.
Json point_to_json(const GammaPoint& point);
GammaPoint point_from_json(const Json& j);

/// {"schema", "n", "dim", "S": [matrix...], "P": matrix}.
Json tuple_to_json(const OperatorTuple& tuple);
OperatorTuple tuple_from_json(
    const Json& j,
    OperatorTuple::Commutativity policy = OperatorTuple::Commutativity::kEnforce);

/// json::parse with parse errors mapped to ParseError.
Json parse_json(std::string_view text);

Json membership_to_json(const MembershipVerdict& verdict);

/// Memberships in all three regions, fiber roots and the Costara
/// cross-check when |p| < 1.
Json point_check_report(const GammaPoint& point, double tol);

Json scan_summary_to_json(const PencilScanReport& report);
/// Scalar scans: i,re_alpha,im_alpha,phi_value,modulus_lhs,modulus_rhs.
/// Operator scans: i,re_alpha,im_alpha,min_eig. Preceded by a "# schema" line.
std::string scan_to_csv(const PencilScanReport& report);

Json gamma_unitary_to_json(const GammaUnitaryVerdict& verdict);
Json vn_to_json(const VonNeumannResult& result);
Json certificate_to_json(const CertificateReport& report);
Json decomposition_to_json(const DecompositionResult& result);
Json verification_to_json(const VerificationReport& report);
Json ground_truth_to_json(const GroundTruth& truth);
Json explore_to_json(const ExploreReport& report);
std::string slice_to_csv(const std::vector<SliceRow>& rows);

}  // namespace gammakit
