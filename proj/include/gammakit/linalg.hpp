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

#include "gammakit/random.hpp"
#include "gammakit/types.hpp"

namespace gammakit {

/// Largest singular value. Zero for empty matrices.
double spectral_norm(const Matrix& m);

/// Orthonormal basis (as columns) of the numerical kernel of `a`: right
/// singular vectors whose singular value is at most tol * (sigma_max + 1).
Matrix numerical_kernel(const Matrix& a, double tol);

/// Orthonormal basis of the orthogonal complement of range(q) in C^dim, where
/// q has orthonormal columns. Returns the identity when q has no columns.
Matrix orthogonal_complement(const Matrix& q, Eigen::Index dim);

/// Smallest eigenvalue of a Hermitian matrix (lower triangle is read).
double hermitian_min_eigenvalue(const Matrix& h);

/// ||A A* - A* A|| in spectral norm.
double normality_residual(const Matrix& a);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
Matrix random_unitary(Eigen::Index dim, Rng& rng);

/// Complex Gaussian matrix divided by its spectral norm.
Matrix random_contraction(Eigen::Index dim, Rng& rng);

/// Block diagonal assembly of two square matrices (either may be empty).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace gammakit
