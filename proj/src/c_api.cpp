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

#include "gammakit/gammakit.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "gammakit/certify.hpp"
#include "gammakit/decomposition.hpp"
#include "gammakit/errors.hpp"
#include "gammakit/explore.hpp"
#include "gammakit/generators.hpp"
#include "gammakit/linalg.hpp"
#include "gammakit/parallel.hpp"
#include "gammakit/polynomial.hpp"
#include "gammakit/serialization.hpp"

struct gk_grid {
  gammakit::AlphaGrid value;
};
struct gk_point {
  gammakit::GammaPoint value;
};
struct gk_tuple {
  gammakit::OperatorTuple value;
};
struct gk_polynomial {
  gammakit::Polynomial value;
};
struct gk_decomposition {
  gammakit::DecompositionResult value;
};

namespace {

using gammakit::Complex;
using gammakit::ErrorCode;
using gammakit::Matrix;

thread_local std::string last_error;

gk_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return GK_INVALID_ARGUMENT;
    case ErrorCode::kInvalidDimension:
      return GK_INVALID_DIMENSION;
    case ErrorCode::kNumericalFailure:
      return GK_NUMERICAL_FAILURE;
    case ErrorCode::kDegenerateCombination:
      return GK_DEGENERATE_COMBINATION;
    case ErrorCode::kTheoremViolation:
      return GK_THEOREM_VIOLATION;
    case ErrorCode::kParse:
      return GK_PARSE_ERROR;
  }
  return GK_INTERNAL;
}

template <class F>
gk_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return GK_OK;
  } catch (const gammakit::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GK_INTERNAL;
  }
}

void require(const void* pointer, const char* name) {
  if (pointer == nullptr) throw gammakit::InvalidArgument(std::string(name) + " is null");
}

char* duplicate(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out, const std::string& text) {
  if (out != nullptr) *out = duplicate(text);
}

Complex to_complex(gk_complex z) { return {z.re, z.im}; }
gk_complex from_complex(Complex z) { return {z.real(), z.imag()}; }

gammakit::OperatorTuple::Commutativity policy(int enforce) {
  return enforce ? gammakit::OperatorTuple::Commutativity::kEnforce
                 : gammakit::OperatorTuple::Commutativity::kRecord;
}

Matrix read_matrix(const gk_complex* data, int dim) {
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = to_complex(data[r * dim + c]);
  }
  return m;
}

const gammakit::AlphaGrid& grid_or(const gk_grid* grid, const gammakit::AlphaGrid& fallback) {
  return grid != nullptr ? grid->value : fallback;
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "0.1.0"; }

const char* gk_status_name(gk_status status) {
  switch (status) {
    case GK_OK:
      return "ok";
    case GK_INVALID_ARGUMENT:
      return "invalid_argument";
    case GK_INVALID_DIMENSION:
      return "invalid_dimension";
    case GK_NUMERICAL_FAILURE:
      return "numerical_failure";
    case GK_DEGENERATE_COMBINATION:
      return "degenerate_combination";
    case GK_THEOREM_VIOLATION:
      return "theorem_violation";
    case GK_PARSE_ERROR:
      return "parse_error";
    case GK_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* gk_last_error(void) { return last_error.c_str(); }

void gk_string_free(char* text) { delete[] text; }

gk_status gk_set_threads(int threads) {
  return guard([&] {
    if (threads < 0) throw gammakit::InvalidArgument("thread count must be >= 0");
    gammakit::set_thread_count(threads);
  });
}

int gk_get_threads(void) { return gammakit::thread_count(); }

// ---- grids ----

gk_status gk_grid_standard(gk_grid** out) {
  return guard([&] {
    require(out, "out");
    *out = new gk_grid{gammakit::AlphaGrid::standard()};
  });
}

gk_status gk_grid_uniform(int rings, int angles, gk_grid** out) {
  return guard([&] {
    require(out, "out");
    gammakit::AlphaGrid grid = gammakit::AlphaGrid::uniform(rings, angles);
    grid.validate();
    *out = new gk_grid{std::move(grid)};
  });
}

gk_status gk_grid_refined(const gk_grid* grid, int factor, gk_grid** out) {
  return guard([&] {
    require(grid, "grid");
    require(out, "out");
    *out = new gk_grid{grid->value.refined(factor)};
  });
}

gk_status gk_grid_sample_count(const gk_grid* grid, size_t* out) {
  return guard([&] {
    require(grid, "grid");
    require(out, "out");
    *out = grid->value.samples().size();
  });
}

void gk_grid_free(gk_grid* grid) { delete grid; }

// ---- points ----

gk_status gk_point_create(int n, const gk_complex* s, gk_complex p, gk_point** out) {
  return guard([&] {
    require(out, "out");
    if (n < 2) throw gammakit::InvalidDimension("n must be >= 2");
    require(s, "s");
    std::vector<Complex> coords;
    for (int i = 0; i < n - 1; ++i) coords.push_back(to_complex(s[i]));
    *out = new gk_point{gammakit::GammaPoint(std::move(coords), to_complex(p))};
  });
}

gk_status gk_symmetrize(int n, const gk_complex* z, gk_point** out) {
  return guard([&] {
    require(out, "out");
    if (n < 2) throw gammakit::InvalidDimension("n must be >= 2");
    require(z, "z");
    std::vector<Complex> values;
    for (int i = 0; i < n; ++i) values.push_back(to_complex(z[i]));
    *out = new gk_point{gammakit::symmetrize(values)};
  });
}

gk_status gk_point_from_json(const char* json, gk_point** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new gk_point{gammakit::point_from_json(gammakit::parse_json(json))};
  });
}

gk_status gk_point_to_json(const gk_point* point, char** out) {
  return guard([&] {
    require(point, "point");
    require(out, "out");
    emit(out, gammakit::point_to_json(point->value).dump());
  });
}

void gk_point_free(gk_point* point) { delete point; }

int gk_point_n(const gk_point* point) { return point != nullptr ? point->value.n() : 0; }

gk_status gk_point_coordinate(const gk_point* point, int k, gk_complex* out) {
  return guard([&] {
    require(point, "point");
    require(out, "out");
    *out = from_complex(point->value.coordinate(k));
  });
}

gk_status gk_point_fiber_roots(const gk_point* point, gk_complex* roots) {
  return guard([&] {
    require(point, "point");
    require(roots, "roots");
    const auto values = gammakit::fiber_roots(point->value);
    for (std::size_t j = 0; j < values.size(); ++j) roots[j] = from_complex(values[j]);
  });
}

gk_status gk_point_membership(const gk_point* point, gk_region region, double tol, int* inside,
                              double* margin) {
  return guard([&] {
    require(point, "point");
    gammakit::Region r;
    switch (region) {
      case GK_REGION_CLOSED:
        r = gammakit::Region::kClosed;
        break;
      case GK_REGION_OPEN:
        r = gammakit::Region::kOpen;
        break;
      case GK_REGION_DISTINGUISHED_BOUNDARY:
        r = gammakit::Region::kDistinguishedBoundary;
        break;
      default:
        throw gammakit::InvalidArgument("unknown region");
    }
    const auto verdict = gammakit::membership(point->value, r, tol);
    if (inside != nullptr) *inside = verdict.inside ? 1 : 0;
    if (margin != nullptr) *margin = verdict.margin;
  });
}

gk_status gk_point_costara(const gk_point* point, double tol, int* applicable, int* inside) {
  return guard([&] {
    require(point, "point");
    const auto verdict = gammakit::costara_membership(point->value, tol);
    if (applicable != nullptr) *applicable = verdict.has_value() ? 1 : 0;
    if (inside != nullptr) *inside = verdict.value_or(false) ? 1 : 0;
  });
}

gk_status gk_point_rotate(const gk_point* point, gk_complex omega, gk_point** out) {
  return guard([&] {
    require(point, "point");
    require(out, "out");
    *out = new gk_point{gammakit::rotate_point(point->value, to_complex(omega))};
  });
}

gk_status gk_point_pencil_value(const gk_point* point, int i, double* out) {
  return guard([&] {
    require(point, "point");
    require(out, "out");
    *out = gammakit::scalar_pencil_value(point->value, i);
  });
}

gk_status gk_point_check_report(const gk_point* point, double tol, char** json) {
  return guard([&] {
    require(point, "point");
    require(json, "json");
    emit(json, gammakit::point_check_report(point->value, tol).dump());
  });
}

gk_status gk_point_pencil_scan(const gk_point* point, const gk_grid* grid, double* minimum,
                               char** summary_json, char** csv) {
  return guard([&] {
    require(point, "point");
    const auto report = gammakit::scalar_pencil_scan(
        point->value, grid_or(grid, gammakit::AlphaGrid::standard()));
    if (minimum != nullptr) *minimum = report.minimum;
    emit(summary_json, gammakit::scan_summary_to_json(report).dump());
    emit(csv, gammakit::scan_to_csv(report));
  });
}

// ---- tuples ----

gk_status gk_tuple_create(int n, int dim, const gk_complex* s, const gk_complex* p,
                          int enforce_commutativity, gk_tuple** out) {
  return guard([&] {
    require(out, "out");
    if (n < 2) throw gammakit::InvalidDimension("n must be >= 2");
    if (dim < 1) throw gammakit::InvalidDimension("dim must be >= 1");
    require(s, "s");
    require(p, "p");
    std::vector<Matrix> matrices;
    for (int i = 0; i < n - 1; ++i) {
      matrices.push_back(read_matrix(s + static_cast<std::ptrdiff_t>(i) * dim * dim, dim));
    }
    *out = new gk_tuple{gammakit::OperatorTuple(std::move(matrices), read_matrix(p, dim),
                                                policy(enforce_commutativity))};
  });
}

gk_status gk_tuple_from_json(const char* json, int enforce_commutativity, gk_tuple** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new gk_tuple{
        gammakit::tuple_from_json(gammakit::parse_json(json), policy(enforce_commutativity))};
  });
}

gk_status gk_tuple_to_json(const gk_tuple* tuple, char** out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    emit(out, gammakit::tuple_to_json(tuple->value).dump());
  });
}

void gk_tuple_free(gk_tuple* tuple) { delete tuple; }

int gk_tuple_n(const gk_tuple* tuple) { return tuple != nullptr ? tuple->value.n() : 0; }

int gk_tuple_dim(const gk_tuple* tuple) {
  return tuple != nullptr ? static_cast<int>(tuple->value.dim()) : 0;
}

gk_status gk_tuple_matrix(const gk_tuple* tuple, int k, gk_complex* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    const Matrix& m = tuple->value.coordinate(k);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = from_complex(m(r, c));
    }
  });
}

gk_status gk_tuple_commutativity_residual(const gk_tuple* tuple, double* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = tuple->value.commutativity_residual();
  });
}

gk_status gk_tuple_rotate(const gk_tuple* tuple, gk_complex omega, gk_tuple** out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = new gk_tuple{gammakit::rotate_tuple(tuple->value, to_complex(omega))};
  });
}

gk_status gk_tuple_pencil_min_eig(const gk_tuple* tuple, int i, gk_complex alpha, double* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = gammakit::hermitian_min_eigenvalue(
        gammakit::operator_pencil(tuple->value, i, to_complex(alpha)));
  });
}

gk_status gk_tuple_pencil_scan(const gk_tuple* tuple, const gk_grid* grid, double* minimum,
                               char** summary_json, char** csv) {
  return guard([&] {
    require(tuple, "tuple");
    const auto report = gammakit::pencil_min_eig_scan(
        tuple->value, grid_or(grid, gammakit::AlphaGrid::standard()));
    if (minimum != nullptr) *minimum = report.minimum;
    emit(summary_json, gammakit::scan_summary_to_json(report).dump());
    emit(csv, gammakit::scan_to_csv(report));
  });
}

gk_status gk_tuple_joint_spectrum(const gk_tuple* tuple, uint64_t seed, gk_complex* points,
                                  double* residual) {
  return guard([&] {
    require(tuple, "tuple");
    const auto spectrum = gammakit::joint_spectrum(tuple->value, seed);
    if (residual != nullptr) *residual = spectrum.residual;
    if (points != nullptr) {
      std::size_t offset = 0;
      for (const auto& point : spectrum.points) {
        for (const Complex& c : point) points[offset++] = from_complex(c);
      }
    }
  });
}

gk_status gk_tuple_is_gamma_unitary(const gk_tuple* tuple, double tol, int* verdict,
                                    char** json) {
  return guard([&] {
    require(tuple, "tuple");
    const auto result = gammakit::is_gamma_unitary(tuple->value, tol);
    if (verdict != nullptr) *verdict = result.verdict ? 1 : 0;
    emit(json, gammakit::gamma_unitary_to_json(result).dump());
  });
}

void gk_certify_options_default(gk_certify_options* options) {
  if (options == nullptr) return;
  const gammakit::CertifyOptions defaults;
  options->grid = nullptr;
  options->tol = defaults.tol;
  options->pencil_tol = defaults.pencil_tol;
  options->normality_tol = defaults.normality_tol;
  options->vn_trials = defaults.vn_trials;
  options->vn_degree = defaults.vn_degree;
  options->vn_terms = defaults.vn_terms;
  options->vn_samples = defaults.vn_samples;
  options->seed = defaults.seed;
}

gk_status gk_certify(const gk_tuple* tuple, const gk_certify_options* options,
                     gk_verdict* verdict, char** json) {
  return guard([&] {
    require(tuple, "tuple");
    gammakit::CertifyOptions opts;
    if (options != nullptr) {
      if (options->grid != nullptr) opts.grid = options->grid->value;
      opts.tol = options->tol;
      opts.pencil_tol = options->pencil_tol;
      opts.normality_tol = options->normality_tol;
      opts.vn_trials = options->vn_trials;
      opts.vn_degree = options->vn_degree;
      opts.vn_terms = options->vn_terms;
      opts.vn_samples = options->vn_samples;
      opts.seed = options->seed;
    }
    const auto report = gammakit::certify_gamma_contraction(tuple->value, opts);
    if (verdict != nullptr) {
      switch (report.verdict) {
        case gammakit::Verdict::kExactGammaContraction:
          *verdict = GK_VERDICT_EXACT;
          break;
        case gammakit::Verdict::kNecessaryConditionsPassed:
          *verdict = GK_VERDICT_NECESSARY_PASSED;
          break;
        case gammakit::Verdict::kFailed:
          *verdict = GK_VERDICT_FAILED;
          break;
      }
    }
    emit(json, gammakit::certificate_to_json(report).dump());
  });
}

// ---- polynomials ----

gk_status gk_polynomial_create(int variables, gk_polynomial** out) {
  return guard([&] {
    require(out, "out");
    *out = new gk_polynomial{gammakit::Polynomial(variables)};
  });
}

gk_status gk_polynomial_random(int variables, int max_degree, int max_terms, uint64_t seed,
                               gk_polynomial** out) {
  return guard([&] {
    require(out, "out");
    gammakit::Rng rng(seed);
    *out = new gk_polynomial{gammakit::Polynomial::random(variables, max_degree, max_terms, rng)};
  });
}

gk_status gk_polynomial_add_term(gk_polynomial* poly, const int* exponents,
                                 gk_complex coefficient) {
  return guard([&] {
    require(poly, "poly");
    require(exponents, "exponents");
    std::vector<int> e(exponents, exponents + poly->value.variables());
    poly->value.add_term(std::move(e), to_complex(coefficient));
  });
}

void gk_polynomial_free(gk_polynomial* poly) { delete poly; }

gk_status gk_polynomial_evaluate(const gk_polynomial* poly, const gk_tuple* tuple,
                                 gk_complex* out) {
  return guard([&] {
    require(poly, "poly");
    require(tuple, "tuple");
    require(out, "out");
    const Matrix m = poly->value.evaluate(tuple->value);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = from_complex(m(r, c));
    }
  });
}

gk_status gk_vn_check(const gk_tuple* tuple, const gk_polynomial* poly, int boundary_samples,
                      uint64_t seed, gk_vn_result* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(poly, "poly");
    require(out, "out");
    const auto r = gammakit::vn_check(tuple->value, poly->value, boundary_samples, seed);
    *out = {r.operator_norm, r.sampled_sup, r.slack, r.violation ? 1 : 0, r.samples};
  });
}

// ---- decomposition ----

gk_status gk_is_cnu(const gk_tuple* tuple, double tol, int* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = gammakit::is_cnu(tuple->value.P(), tol) ? 1 : 0;
  });
}

gk_status gk_maximal_unitary_dim(const gk_tuple* tuple, double tol, int* out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = static_cast<int>(gammakit::maximal_unitary_subspace(tuple->value.P(), tol).cols());
  });
}

gk_status gk_decompose(const gk_tuple* tuple, double tol, gk_decomposition** out) {
  return guard([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = new gk_decomposition{gammakit::canonical_decompose(tuple->value, tol)};
  });
}

void gk_decomposition_free(gk_decomposition* result) { delete result; }

int gk_decomposition_k(const gk_decomposition* result) {
  return result != nullptr ? static_cast<int>(result->value.k()) : -1;
}

gk_status gk_decomposition_to_json(const gk_decomposition* result, char** out) {
  return guard([&] {
    require(result, "result");
    require(out, "out");
    emit(out, gammakit::decomposition_to_json(result->value).dump());
  });
}

gk_status gk_decomposition_unitary_part(const gk_decomposition* result, gk_tuple** out) {
  return guard([&] {
    require(result, "result");
    require(out, "out");
    *out = new gk_tuple{result->value.unitary_part};
  });
}

gk_status gk_decomposition_cnu_part(const gk_decomposition* result, gk_tuple** out) {
  return guard([&] {
    require(result, "result");
    require(out, "out");
    *out = new gk_tuple{result->value.cnu_part};
  });
}

gk_status gk_decomposition_verify(const gk_decomposition* result, const gk_tuple* tuple,
                                  double tol, int* passed, char** json) {
  return guard([&] {
    require(result, "result");
    require(tuple, "tuple");
    const auto report = gammakit::verify_decomposition(tuple->value, result->value, tol);
    if (passed != nullptr) *passed = report.passed ? 1 : 0;
    emit(json, gammakit::verification_to_json(report).dump());
  });
}

// ---- generators and exploration ----

gk_status gk_generate(uint64_t seed, int n, int dim, const char* model, gk_tuple** tuple,
                      char** truth_json) {
  return guard([&] {
    require(model, "model");
    require(tuple, "tuple");
    const gammakit::Instance instance =
        gammakit::generate({seed, n, dim, gammakit::model_from_name(model)});
    emit(truth_json, gammakit::ground_truth_to_json(instance.truth).dump());
    *tuple = new gk_tuple{instance.tuple};
  });
}

gk_status gk_explore(int n, int budget, uint64_t seed, const gk_grid* grid, double tol,
                     char** json) {
  return guard([&] {
    require(json, "json");
    gammakit::ExploreOptions options;
    options.n = n;
    options.budget = budget;
    options.seed = seed;
    if (grid != nullptr) options.grid = grid->value;
    options.tol = tol;
    emit(json, gammakit::explore_to_json(gammakit::explore(options)).dump());
  });
}

gk_status gk_region_slice(const gk_point* base, int vary, double extent, int resolution,
                          const gk_grid* grid, double tol, char** csv) {
  return guard([&] {
    require(base, "base");
    require(csv, "csv");
    gammakit::RegionSliceOptions options;
    options.base = base->value;
    options.vary = vary;
    options.extent = extent;
    options.resolution = resolution;
    if (grid != nullptr) options.grid = grid->value;
    options.tol = tol;
    emit(csv, gammakit::slice_to_csv(gammakit::region_slice(options)));
  });
}

}  // extern "C"
