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

#include "gammakit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gammakit/errors.hpp"
#include "gammakit/linalg.hpp"

namespace gammakit {

Polynomial::Polynomial(int variables) : variables_(variables) {
  if (variables < 2) throw InvalidDimension("polynomials need n >= 2 variables");
}

Polynomial Polynomial::constant(int variables, Complex value) {
  Polynomial f(variables);
  f.add_term(std::vector<int>(static_cast<std::size_t>(variables), 0), value);
  return f;
}

Polynomial Polynomial::coordinate(int variables, int k) {
  if (k < 1 || k > variables) throw InvalidArgument("coordinate index out of range");
  Polynomial f(variables);
  std::vector<int> exponents(static_cast<std::size_t>(variables), 0);
  exponents[static_cast<std::size_t>(k - 1)] = 1;
  f.add_term(std::move(exponents), 1.0);
  return f;
}

Polynomial Polynomial::random(int variables, int max_degree, int max_terms, Rng& rng) {
  if (max_degree < 0 || max_terms < 1) {
    throw InvalidArgument("random polynomial needs max_degree >= 0 and max_terms >= 1");
  }
  Polynomial f(variables);
  const int terms = rng.uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exponents(static_cast<std::size_t>(variables), 0);
    const int degree = rng.uniform_int(0, max_degree);
    for (int d = 0; d < degree; ++d) {
      ++exponents[static_cast<std::size_t>(rng.uniform_int(0, variables - 1))];
    }
    f.add_term(std::move(exponents), rng.complex_normal());
  }
  return f;
}

void Polynomial::add_term(std::vector<int> exponents, Complex coefficient) {
  if (static_cast<int>(exponents.size()) != variables_) {
    throw InvalidArgument("monomial has the wrong number of exponents");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw InvalidArgument("monomial exponents must be non-negative");
  }
  terms_.push_back({std::move(exponents), coefficient});
}

int Polynomial::total_degree() const {
  int degree = 0;
  for (const auto& term : terms_) {
    degree = std::max(degree, std::accumulate(term.exponents.begin(),
                                              term.exponents.end(), 0));
  }
  return degree;
}

Complex Polynomial::evaluate(std::span<const Complex> coordinates) const {
  if (static_cast<int>(coordinates.size()) != variables_) {
    throw InvalidArgument("polynomial evaluated at a point of the wrong size");
  }
  Complex total = 0.0;
  for (const auto& term : terms_) {
    Complex value = term.coefficient;
    for (int k = 0; k < variables_; ++k) {
      for (int e = 0; e < term.exponents[static_cast<std::size_t>(k)]; ++e) {
        value *= coordinates[static_cast<std::size_t>(k)];
      }
    }
    total += value;
  }
  return total;
}

Complex Polynomial::evaluate(const GammaPoint& point) const {
  const std::vector<Complex> coords = point.coordinates();
  return evaluate(coords);
}

Matrix Polynomial::evaluate(const OperatorTuple& tuple) const {
  if (tuple.n() != variables_) {
    throw InvalidArgument("polynomial has " + std::to_string(variables_) +
                          " variables but the tuple has " + std::to_string(tuple.n()));
  }
  const Eigen::Index dim = tuple.dim();
  // powers[k][e] = (coordinate k+1)^e
  std::vector<std::vector<Matrix>> powers(static_cast<std::size_t>(variables_));
  for (int k = 0; k < variables_; ++k) {
    int highest = 0;
    for (const auto& term : terms_) {
      highest = std::max(highest, term.exponents[static_cast<std::size_t>(k)]);
    }
    auto& table = powers[static_cast<std::size_t>(k)];
    table.push_back(Matrix::Identity(dim, dim));
    for (int e = 1; e <= highest; ++e) {
      table.push_back(table.back() * tuple.coordinate(k + 1));
    }
  }
  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& term : terms_) {
    Matrix product = Matrix::Identity(dim, dim);
    for (int k = 0; k < variables_; ++k) {
      const int e = term.exponents[static_cast<std::size_t>(k)];
      if (e > 0) product = product * powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
    }
    total += term.coefficient * product;
  }
  return total;
}

namespace {

double modulus_on_torus(const Polynomial& f, const std::vector<double>& angles) {
  std::vector<Complex> z(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j) z[j] = std::polar(1.0, angles[j]);
  return std::abs(f.evaluate(symmetrize(z)));
}

// Pattern search over the angles, halving the step when no move improves.
double ascend(const Polynomial& f, std::vector<double> angles, double value) {
  for (double step = 0.25; step > 1e-10; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t j = 0; j < angles.size(); ++j) {
        for (double direction : {1.0, -1.0}) {
          std::vector<double> trial = angles;
          trial[j] += direction * step;
          const double trial_value = modulus_on_torus(f, trial);
          if (trial_value > value) {
            angles = std::move(trial);
            value = trial_value;
            improved = true;
            break;
          }
        }
      }
    }
  }
  return value;
}

}  // namespace

double estimate_sup_on_gamma(const Polynomial& f, int boundary_samples,
                             std::uint64_t seed,
                             const std::vector<std::vector<Complex>>& extra_roots) {
  const int n = f.variables();
  Rng rng(seed);
  struct Candidate {
    std::vector<double> angles;
    double value;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(boundary_samples) + 64);
  for (int t = 0; t < boundary_samples; ++t) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = 2.0 * std::numbers::pi * rng.uniform();
    const double value = modulus_on_torus(f, angles);
    candidates.push_back({std::move(angles), value});
  }
  for (int t = 0; t < 64; ++t) {
    std::vector<double> angles(static_cast<std::size_t>(n), 2.0 * std::numbers::pi * t / 64);
    const double value = modulus_on_torus(f, angles);
    candidates.push_back({std::move(angles), value});
  }

  double sup = 0.0;
  std::vector<Candidate> starts;
  for (const auto& roots : extra_roots) {
    // Points of the closed polydisc are legitimate samples of Gamma_n; their
    // angles seed the ascent on the torus.
    std::vector<double> angles;
    for (const Complex& z : roots) angles.push_back(std::arg(z));
    sup = std::max(sup, std::abs(f.evaluate(symmetrize(roots))));
    const double value = modulus_on_torus(f, angles);
    starts.push_back({std::move(angles), value});
    if (starts.size() >= 8) break;
  }

  const std::size_t best = std::min<std::size_t>(8, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(best),
                    candidates.end(),
                    [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
  for (std::size_t c = 0; c < best; ++c) starts.push_back(candidates[c]);
  for (const auto& start : starts) {
    sup = std::max(sup, ascend(f, start.angles, start.value));
  }
  return sup;
}

VonNeumannResult vn_check(const OperatorTuple& tuple, const Polynomial& f,
                          int boundary_samples, std::uint64_t seed) {
  if (f.variables() != tuple.n()) {
    throw InvalidArgument("polynomial variable count does not match the tuple");
  }
  if (boundary_samples < 1000) {
    throw InvalidArgument("vn_check needs at least 1000 boundary samples");
  }
  VonNeumannResult result;
  result.samples = boundary_samples;
  result.operator_norm = spectral_norm(f.evaluate(tuple));

  // Fiber roots of the joint spectrum, pulled into the closed polydisc.
  std::vector<std::vector<Complex>> seeds;
  try {
    for (const GammaPoint& point : joint_spectrum_points(joint_spectrum(tuple))) {
      std::vector<Complex> roots = fiber_roots(point);
      for (Complex& z : roots) {
        if (std::abs(z) > 1.0) z /= std::abs(z);
      }
      seeds.push_back(std::move(roots));
    }
  } catch (const Error&) {
    seeds.clear();
  }
  result.sampled_sup = estimate_sup_on_gamma(f, boundary_samples, seed, seeds);
  result.slack = 1e-6 * (1.0 + result.sampled_sup);
  result.violation = result.operator_norm > result.sampled_sup + result.slack;
  return result;
}

}  // namespace gammakit
