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

#include "gammakit/linalg.hpp"

#include <algorithm>
#include <vector>

#include "gammakit/errors.hpp"

namespace gammakit {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix numerical_kernel(const Matrix& a, double tol) {
  const Eigen::Index cols = a.cols();
  if (cols == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double threshold = tol * (sigma_max + 1.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (j >= sigma.size() || sigma(j) <= threshold) keep.push_back(j);
  }
  Matrix basis(cols, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(keep[c]);
  }
  return basis;
}

Matrix orthogonal_complement(const Matrix& q, Eigen::Index dim) {
  if (q.cols() == 0) return Matrix::Identity(dim, dim);
  if (q.rows() != dim) {
    throw InvalidDimension("orthogonal_complement: basis has wrong row count");
  }
  Eigen::HouseholderQR<Matrix> qr(q);
  const Matrix full = qr.householderQ() * Matrix::Identity(dim, dim);
  return full.rightCols(dim - q.cols());
}

double hermitian_min_eigenvalue(const Matrix& h) {
  if (h.rows() == 1) return h(0, 0).real();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge", h.norm());
  }
  return solver.eigenvalues()(0);
}

double normality_residual(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const Matrix commutator = a * a.adjoint() - a.adjoint() * a;
  return spectral_norm(commutator);
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double modulus = std::abs(r(j, j));
    const Complex phase = modulus > 0.0 ? r(j, j) / modulus : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

Matrix random_contraction(Eigen::Index dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  }
  const double norm = spectral_norm(g);
  return norm > 0.0 ? Matrix(g / norm) : g;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows() + b.rows();
  Matrix out = Matrix::Zero(n, n);
  if (a.size() > 0) out.topLeftCorner(a.rows(), a.cols()) = a;
  if (b.size() > 0) out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace gammakit
