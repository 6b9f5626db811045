/*
 * Copyright 2026 The lsa-coord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lsa::num {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Square complex matrix with exact conjugate symmetry.
///
/// The validating constructor accepts inputs whose conjugate-symmetry
/// defect is at most kSymmetryTol (absolute, entrywise) and stores the
/// symmetrized matrix (M + M^H) / 2, so every stored instance is exactly
/// Hermitian with a real diagonal.
class HermitianMatrix {
 public:
  static constexpr double kSymmetryTol = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& m);

  /// Symmetrizes without validating; for matrices produced by products of
  /// Hermitian factors where rounding breaks exact symmetry.
  static HermitianMatrix symmetrize(const CMatrix& m);
  static HermitianMatrix identity(int n);
  static HermitianMatrix zero(int n);
  static HermitianMatrix diagonal(const RVector& d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  double trace() const { return m_.trace().real(); }

  /// Real quadratic form v^H M v.
  double quadratic_form(const CVector& v) const;

  HermitianMatrix operator*(double s) const;
  HermitianMatrix operator+(const HermitianMatrix& o) const;

 private:
  struct Unchecked {};
  HermitianMatrix(CMatrix m, Unchecked) : m_(std::move(m)) {}

  CMatrix m_;
};

/// Eigenvalues ascending; eigenvector columns unit-norm with their
/// largest-magnitude entry made real positive.
struct EigenSystem {
  RVector values;
  CMatrix vectors;
};

EigenSystem eigh(const HermitianMatrix& m);

/// Ascending eigenvalues only.
RVector eigenvalues(const HermitianMatrix& m);

inline constexpr double kPsdTol = 1e-10;

/// Principal square root; eigenvalues in [-kPsdTol, 0) are clamped to 0,
/// anything lower throws NotPsdError.
HermitianMatrix psd_sqrt(const HermitianMatrix& m);

/// (M + ridge I)^{-1/2} computed on the clamped spectrum. Throws
/// SingularityError when a shifted eigenvalue is not positive.
HermitianMatrix psd_inv_sqrt(const HermitianMatrix& m, double ridge = 0.0);

/// 1e-9 * trace / n when the spectrum is numerically singular
/// (min eigenvalue < 1e-12 * max eigenvalue), else 0.
double regularization_ridge(const HermitianMatrix& m);

/// Rotates the phase of v so that its largest-magnitude entry is real
/// positive. The earliest index wins near-ties.
CVector canonical_phase(const CVector& v);

}  // namespace lsa::num
