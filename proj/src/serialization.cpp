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

#include "gammakit/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "gammakit/errors.hpp"

namespace gammakit {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) {
      throw ParseError(std::string(what) + ": unknown field '" + item.key() + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) {
      throw ParseError(std::string(what) + ": missing field '" + key + "'");
    }
  }
}

void check_schema(const Json& j, const char* expected) {
  if (!j.contains("schema")) return;
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != expected) {
    throw ParseError(std::string("expected schema ") + expected);
  }
}

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string(what) + ": complex numbers are [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Matrix matrix_from_json(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(std::string(what) + ": expected " + std::to_string(dim) + " columns");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

// JSON has no NaN/inf; such values become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json complex_to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json point_to_json(const GammaPoint& point) {
  Json s = Json::array();
  for (const Complex& v : point.s()) s.push_back(complex_to_json(v));
  return {{"schema", kPointSchema}, {"n", point.n()}, {"s", s}, {"p", complex_to_json(point.p())}};
}

GammaPoint point_from_json(const Json& j) {
  require_keys(j, {"schema", "n", "s", "p"}, {"n", "s", "p"}, "point");
  check_schema(j, kPointSchema);
  const int n = int_from_json(j["n"], "point.n");
  if (n < 2) throw ParseError("point.n must be >= 2");
  if (!j["s"].is_array() || static_cast<int>(j["s"].size()) != n - 1) {
    throw ParseError("point.s must hold n - 1 complex numbers");
  }
  std::vector<Complex> s;
  for (const Json& v : j["s"]) s.push_back(complex_from_json(v, "point.s"));
  return GammaPoint(std::move(s), complex_from_json(j["p"], "point.p"));
}

Json tuple_to_json(const OperatorTuple& tuple) {
  Json s = Json::array();
  for (const Matrix& m : tuple.S_list()) s.push_back(matrix_to_json(m));
  return {{"schema", kTupleSchema},
          {"n", tuple.n()},
          {"dim", tuple.dim()},
          {"S", s},
          {"P", matrix_to_json(tuple.P())}};
}

OperatorTuple tuple_from_json(const Json& j, OperatorTuple::Commutativity policy) {
  require_keys(j, {"schema", "n", "dim", "S", "P"}, {"n", "dim", "S", "P"}, "tuple");
  check_schema(j, kTupleSchema);
  const int n = int_from_json(j["n"], "tuple.n");
  const int dim = int_from_json(j["dim"], "tuple.dim");
  if (n < 2) throw ParseError("tuple.n must be >= 2");
  if (dim < 1) throw ParseError("tuple.dim must be >= 1");
  if (!j["S"].is_array() || static_cast<int>(j["S"].size()) != n - 1) {
    throw ParseError("tuple.S must hold n - 1 matrices");
  }
  std::vector<Matrix> s;
  for (const Json& m : j["S"]) s.push_back(matrix_from_json(m, dim, "tuple.S"));
  return OperatorTuple(std::move(s), matrix_from_json(j["P"], dim, "tuple.P"), policy);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json membership_to_json(const MembershipVerdict& verdict) {
  return {{"region", region_name(verdict.region)},
          {"inside", verdict.inside},
          {"max_root_modulus", number(verdict.max_root_modulus)},
          {"min_root_modulus", number(verdict.min_root_modulus)},
          {"margin", number(verdict.margin)},
          {"boundary_deviation", number(verdict.boundary_deviation)}};
}

Json point_check_report(const GammaPoint& point, double tol) {
  Json report = {{"schema", kPointCheckSchema}, {"point", point_to_json(point)}, {"tol", tol}};
  Json roots = Json::array();
  for (const Complex& z : fiber_roots(point)) roots.push_back(complex_to_json(z));
  report["fiber_roots"] = roots;
  Json regions = Json::object();
  for (Region region : {Region::kClosed, Region::kOpen, Region::kDistinguishedBoundary}) {
    regions[region_name(region)] = membership_to_json(membership(point, region, tol));
  }
  report["membership"] = regions;
  Json costara = {{"applicable", false}};
  if (auto c = costara_coefficients(point)) {
    Json coeffs = Json::array();
    for (const Complex& v : *c) coeffs.push_back(complex_to_json(v));
    const bool inside = *costara_membership(point, tol);
    costara = {{"applicable", true},
               {"coefficients", coeffs},
               {"inside", inside},
               {"agrees_with_roots", inside == regions["closed"]["inside"].get<bool>()}};
  }
  report["costara"] = costara;
  return report;
}

Json scan_summary_to_json(const PencilScanReport& report) {
  Json per_index = Json::array();
  for (double v : report.per_index_minimum) per_index.push_back(number(v));
  Json out = {{"schema", kScanSchema},
              {"n", report.n},
              {"operator_level", report.operator_level},
              {"samples", report.samples.size()},
              {"minimum", number(report.minimum)},
              {"argmin_index", report.argmin_index},
              {"argmin_alpha", complex_to_json(report.argmin_alpha)},
              {"per_index_minimum", per_index}};
  if (!report.operator_level) {
    out["equivalence_max_discrepancy"] = number(report.equivalence_max_discrepancy);
    out["verdict_disagreements"] = report.verdict_disagreements;
  }
  return out;
}

std::string scan_to_csv(const PencilScanReport& report) {
  std::ostringstream out;
  out << "# schema: " << kScanSchema << "\n";
  if (report.operator_level) {
    out << "i,re_alpha,im_alpha,min_eig\n";
  } else {
    out << "i,re_alpha,im_alpha,phi_value,modulus_lhs,modulus_rhs\n";
  }
  for (const PencilSample& s : report.samples) {
    out << s.index << ',' << format_double(s.alpha.real()) << ','
        << format_double(s.alpha.imag()) << ',' << format_double(s.value);
    if (!report.operator_level) {
      out << ',' << format_double(s.modulus_lhs) << ',' << format_double(s.modulus_rhs);
    }
    out << '\n';
  }
  return out.str();
}

Json gamma_unitary_to_json(const GammaUnitaryVerdict& verdict) {
  return {{"verdict", verdict.verdict},
          {"unitarity_residual", number(verdict.unitarity_residual)},
          {"symmetry_residual", number(verdict.symmetry_residual)},
          {"spectral_margin", number(verdict.spectral_margin)},
          {"spectrum_residual", number(verdict.spectrum_residual)},
          {"failed_check", verdict.failed_check.empty() ? Json(nullptr)
                                                         : Json(verdict.failed_check)}};
}

Json vn_to_json(const VonNeumannResult& result) {
  return {{"operator_norm", number(result.operator_norm)},
          {"sampled_sup", number(result.sampled_sup)},
          {"slack", number(result.slack)},
          {"violation", result.violation},
          {"samples", result.samples}};
}

Json certificate_to_json(const CertificateReport& report) {
  Json out = {{"schema", kCertificateSchema},
              {"verdict", verdict_name(report.verdict)},
              {"failed_check", report.failed_check ? Json(*report.failed_check) : Json(nullptr)},
              {"checks_passed", report.checks_passed},
              {"commutativity_residual", number(report.commutativity_residual)},
              {"s_norms", Json::array()},
              {"p_norm", number(report.p_norm)},
              {"normal", report.normal},
              {"normality_residual", number(report.normality_residual)},
              {"note", report.note}};
  for (double v : report.s_norms) out["s_norms"].push_back(number(v));
  if (report.spectrum) {
    Json points = Json::array();
    for (std::size_t j = 0; j < report.spectrum->points.size(); ++j) {
      Json coords = Json::array();
      for (const Complex& v : report.spectrum->points[j]) coords.push_back(complex_to_json(v));
      Json entry = {{"coordinates", coords}};
      if (j < report.spectrum_margins.size()) entry["margin"] = number(report.spectrum_margins[j]);
      points.push_back(std::move(entry));
    }
    out["joint_spectrum"] = {{"points", points},
                             {"residual", number(report.spectrum->residual)},
                             {"attempts", report.spectrum->attempts}};
  }
  if (report.pencil_minimum) {
    out["pencil_scan"] = {{"minimum", number(*report.pencil_minimum)},
                          {"argmin_index", report.pencil_argmin_index},
                          {"argmin_alpha", complex_to_json(report.pencil_argmin_alpha)}};
    if (report.pencil_edge_minimum) {
      out["pencil_scan"]["edge_minimum"] = number(*report.pencil_edge_minimum);
    }
  }
  Json vn = Json::array();
  for (const auto& r : report.vn_results) vn.push_back(vn_to_json(r));
  out["von_neumann"] = vn;
  return out;
}

Json decomposition_to_json(const DecompositionResult& result) {
  Json residuals = Json::array();
  for (const auto& r : result.residuals) {
    residuals.push_back({{"matrix", r.name}, {"upper", number(r.upper)}, {"lower", number(r.lower)}});
  }
  auto part = [](const OperatorTuple& t) {
    if (t.dim() == 0) {
      return Json{{"schema", kTupleSchema}, {"n", t.n()}, {"dim", 0},
                  {"S", Json::array()}, {"P", Json::array()}};
    }
    return tuple_to_json(t);
  };
  return {{"schema", kDecompositionSchema},
          {"k", result.k()},
          {"dim", result.basis_h1.rows()},
          {"tol", result.tol},
          {"scale", number(result.scale)},
          {"basis_h1", matrix_to_json(result.basis_h1)},
          {"basis_h2", matrix_to_json(result.basis_h2)},
          {"unitary_part", part(result.unitary_part)},
          {"cnu_part", part(result.cnu_part)},
          {"residuals", residuals}};
}

Json verification_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"value", number(c.value)},
                      {"threshold", number(c.threshold)},
                      {"passed", c.passed}});
  }
  return {{"passed", report.passed}, {"checks", checks}};
}

Json ground_truth_to_json(const GroundTruth& truth) {
  Json spectrum = Json::array();
  for (const GammaPoint& p : truth.spectrum) spectrum.push_back(point_to_json(p));
  return {{"schema", kGroundTruthSchema},
          {"model", model_name(truth.spec.model)},
          {"seed", truth.spec.seed},
          {"n", truth.spec.n},
          {"dim", truth.spec.dim},
          {"gamma_contraction", truth.gamma_contraction},
          {"expected_k", truth.expected_k ? Json(*truth.expected_k) : Json(nullptr)},
          {"inflation", truth.inflation ? Json(*truth.inflation) : Json(nullptr)},
          {"spectrum", spectrum}};
}

Json explore_to_json(const ExploreReport& report) {
  Json candidates = Json::array();
  for (const auto& c : report.candidates) {
    candidates.push_back({{"point", point_to_json(c.point)},
                          {"membership_margin", number(c.membership_margin)},
                          {"pencil_min", number(c.pencil_min)},
                          {"pencil_min_dense", number(c.pencil_min_dense)}});
  }
  return {{"schema", kExploreSchema},
          {"sampled", report.sampled},
          {"outside", report.outside},
          {"pencil_nonnegative", report.pencil_nonnegative},
          {"dropped_on_refinement", report.dropped_on_refinement},
          {"candidates", candidates}};
}

std::string slice_to_csv(const std::vector<SliceRow>& rows) {
  std::ostringstream out;
  out << "# schema: " << kSliceSchema << "\n";
  out << "re_s,im_s,member,min_pencil\n";
  for (const SliceRow& r : rows) {
    out << format_double(r.re) << ',' << format_double(r.im) << ',' << (r.member ? 1 : 0)
        << ',' << format_double(r.min_pencil) << '\n';
  }
  return out.str();
}

}  // namespace gammakit
