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
#include <span>
#include <vector>

#include "gammakit/operator_core.hpp"
#include "gammakit/random.hpp"
#include "gammakit/types.hpp"

namespace gammakit {

struct Monomial {
  std::vector<int> exponents;
  Complex coefficient;
};

/// Sparse holomorphic polynomial in the n coordinates (s_1, ..., s_{n-1}, p).
class Polynomial {
 public:
  explicit Polynomial(int variables);

  static Polynomial constant(int variables, Complex value);
  /// The k-th coordinate function, k in 1..n.
  static Polynomial coordinate(int variables, int k);
  /// Between 1 and max_terms monomials of total degree <= max_degree with
  /// complex Gaussian coefficients.
  static Polynomial random(int variables, int max_degree, int max_terms, Rng& rng);

  void add_term(std::vector<int> exponents, Complex coefficient);

  int variables() const { return variables_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int total_degree() const;

  Complex evaluate(std::span<const Complex> coordinates) const;
  Complex evaluate(const GammaPoint& point) const;
  /// f(S_1, ..., S_{n-1}, P) by accumulating monomials over cached powers.
  Matrix evaluate(const OperatorTuple& tuple) const;

 private:
  int variables_;
  std::vector<Monomial> terms_;
};

struct VonNeumannResult {
  double operator_norm = 0.0;
  double sampled_sup = 0.0;
  double slack = 0.0;
  bool violation = false;
  int samples = 0;
};

/// Lower estimate of sup |f| over Gamma_n: random torus samples pushed through
/// symmetrization, refined by local ascent from the best candidates. Extra
/// seed points must lie in the closed polydisc.
double estimate_sup_on_gamma(const Polynomial& f, int boundary_samples,
                             std::uint64_t seed,
                             const std::vector<std::vector<Complex>>& extra_roots = {});

/// Compares ||f(tuple)|| with the sampled sup of |f| on the distinguished
/// boundary. Since the sampled sup can only underestimate the true sup, a
/// violation disproves the Gamma_n-contraction property while a pass is only
/// evidence. Slack is 1e-6 * (1 + sampled_sup).
VonNeumannResult vn_check(const OperatorTuple& tuple, const Polynomial& f,
                          int boundary_samples, std::uint64_t seed);

}  // namespace gammakit
