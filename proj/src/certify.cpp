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

#include "gammakit/certify.hpp"

#include <algorithm>

#include "gammakit/linalg.hpp"
#include "gammakit/random.hpp"

namespace gammakit {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kExactGammaContraction:
      return "ExactGammaContraction";
    case Verdict::kNecessaryConditionsPassed:
      return "NecessaryConditionsPassed";
    case Verdict::kFailed:
      return "Failed";
  }
  return "unknown";
}

namespace {

CertificateReport& fail(CertificateReport& report, const char* check) {
  report.verdict = Verdict::kFailed;
  report.failed_check = check;
  return report;
}

}  // namespace

CertificateReport certify_gamma_contraction(const OperatorTuple& tuple,
                                            const CertifyOptions& options) {
  CertificateReport report;
  const int n = tuple.n();
  const double nn = static_cast<double>(n);

  report.commutativity_residual = tuple.commutativity_residual();
  if (!(report.commutativity_residual <= kCommutativityTol)) {
    return fail(report, kCheckCommutativity);
  }
  report.checks_passed.emplace_back(kCheckCommutativity);

  // sup |s_i| over the closed set is C(n, i), attained at (1, ..., 1); this is
  // n for the edge indices and larger in the middle once n >= 4.
  bool norms_ok = true;
  double binomial = 1.0;
  for (int i = 1; i < n; ++i) {
    binomial = binomial * (nn - i + 1) / i;
    const double norm = spectral_norm(tuple.S(i));
    report.s_norms.push_back(norm);
    norms_ok = norms_ok && norm <= binomial * (1.0 + options.tol);
  }
  report.p_norm = spectral_norm(tuple.P());
  norms_ok = norms_ok && report.p_norm <= 1.0 + options.tol;
  if (!norms_ok) return fail(report, kCheckNormBounds);
  report.checks_passed.emplace_back(kCheckNormBounds);

  report.normal = true;
  for (int k = 1; k <= n; ++k) {
    const Matrix& a = tuple.coordinate(k);
    const double norm = spectral_norm(a);
    const double residual = normality_residual(a);
    const double relative = norm > 0.0 ? residual / (norm * norm) : 0.0;
    report.normality_residual = std::max(report.normality_residual, relative);
    report.normal = report.normal && relative <= options.normality_tol;
  }

  report.spectrum = joint_spectrum(tuple, mix_seed(options.seed, 1));
  bool spectrum_ok = true;
  for (const GammaPoint& point : joint_spectrum_points(*report.spectrum)) {
    const MembershipVerdict verdict = membership(point, Region::kClosed, options.tol);
    report.spectrum_margins.push_back(verdict.margin);
    spectrum_ok = spectrum_ok && verdict.inside;
  }
  if (!spectrum_ok) return fail(report, kCheckJointSpectrum);
  report.checks_passed.emplace_back(kCheckJointSpectrum);

  const PencilScanReport scan = pencil_min_eig_scan(tuple, options.grid);
  report.pencil_minimum = scan.minimum;
  report.pencil_argmin_index = scan.argmin_index;
  report.pencil_argmin_alpha = scan.argmin_alpha;
  // Only the edge pencils i = 1 and i = n-1 are necessary conditions for every
  // n. The middle pencils go negative on points of the closed set once n >= 4
  // (z = (1,1,1,0) gives -8 for n = 4, i = 2), so they are reported only.
  const double edge = std::min(scan.per_index_minimum.front(), scan.per_index_minimum.back());
  report.pencil_edge_minimum = edge;
  if (!(edge >= -options.pencil_tol)) return fail(report, kCheckPencil);
  report.checks_passed.emplace_back(kCheckPencil);

  Rng rng(mix_seed(options.seed, 2));
  bool vn_ok = true;
  for (int trial = 0; trial < options.vn_trials; ++trial) {
    const Polynomial f = Polynomial::random(n, options.vn_degree, options.vn_terms, rng);
    report.vn_results.push_back(vn_check(tuple, f, options.vn_samples, rng.next()));
    vn_ok = vn_ok && !report.vn_results.back().violation;
  }
  if (!vn_ok) return fail(report, kCheckVonNeumann);
  report.checks_passed.emplace_back(kCheckVonNeumann);

  if (report.normal) {
    report.verdict = Verdict::kExactGammaContraction;
    report.note =
        "normal tuple with joint spectrum in Gamma_n: spectral theorem gives "
        "the sup-norm bound exactly";
  } else {
    report.verdict = Verdict::kNecessaryConditionsPassed;
    report.note =
        "non-normal tuple: all necessary checks passed; von Neumann samples "
        "can falsify but never prove the spectral-set inequality";
  }
  return report;
}

}  // namespace gammakit
