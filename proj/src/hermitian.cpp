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

#include "lsa/numerics/hermitian.hpp"

#include <cmath>
#include <string>

#include "lsa/error.hpp"

namespace lsa::num {

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("HermitianMatrix: matrix is not square");
  if (!m.allFinite()) throw ValidationError("HermitianMatrix: non-finite entry");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.size() > 0 && defect > kSymmetryTol) {
    throw ValidationError("HermitianMatrix: conjugate-symmetry defect " + std::to_string(defect));
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::symmetrize(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("HermitianMatrix: matrix is not square");
  return {CMatrix((m + m.adjoint()) * 0.5), Unchecked{}};
}

HermitianMatrix HermitianMatrix::identity(int n) { return {CMatrix::Identity(n, n), Unchecked{}}; }

HermitianMatrix HermitianMatrix::zero(int n) { return {CMatrix::Zero(n, n), Unchecked{}}; }

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  return {CMatrix(d.cast<Complex>().asDiagonal()), Unchecked{}};
}

double HermitianMatrix::quadratic_form(const CVector& v) const {
  if (v.size() != m_.rows()) throw ValidationError("quadratic_form: dimension mismatch");
  return v.dot(m_ * v).real();
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return {CMatrix(m_ * s), Unchecked{}}; }

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw ValidationError("HermitianMatrix: dimension mismatch");
  return {CMatrix(m_ + o.m_), Unchecked{}};
}

CVector canonical_phase(const CVector& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double a = std::abs(v(k));
    if (a > best_abs * (1.0 + 1e-12)) {
      best = k;
      best_abs = a;
    }
  }
  if (best_abs <= 0.0) return v;
  const Complex rot = std::conj(v(best)) / best_abs;
  return v * rot;
}

EigenSystem eigh(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) throw Error("eigh: eigensolver did not converge");
  EigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    out.vectors.col(c) = canonical_phase(out.vectors.col(c));
  }
  return out;
}

RVector eigenvalues(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

namespace {

RVector clamped_spectrum(const RVector& values) {
  RVector out = values;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (out(k) < -kPsdTol) {
      throw NotPsdError("matrix is not positive semi-definite (eigenvalue " + std::to_string(out(k)) + ")");
    }
    if (out(k) < 0.0) out(k) = 0.0;
  }
  return out;
}

HermitianMatrix spectral_map(const EigenSystem& es, const RVector& f) {
  const CMatrix& u = es.vectors;
  return HermitianMatrix::symmetrize(u * f.cast<Complex>().asDiagonal() * u.adjoint());
}

}  // namespace

HermitianMatrix psd_sqrt(const HermitianMatrix& m) {
  const EigenSystem es = eigh(m);
  const RVector lam = clamped_spectrum(es.values);
  return spectral_map(es, lam.cwiseSqrt());
}

HermitianMatrix psd_inv_sqrt(const HermitianMatrix& m, double ridge) {
  if (ridge < 0.0) throw DomainError("psd_inv_sqrt: ridge must be non-negative");
  const EigenSystem es = eigh(m);
  RVector lam = clamped_spectrum(es.values);
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    lam(k) += ridge;
    if (!(lam(k) > 0.0)) throw SingularityError("psd_inv_sqrt: singular matrix");
    lam(k) = 1.0 / std::sqrt(lam(k));
  }
  return spectral_map(es, lam);
}

double regularization_ridge(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  const RVector lam = eigenvalues(m);
  if (lam(0) < 1e-12 * lam(lam.size() - 1)) return 1e-9 * m.trace() / m.dim();
  return 0.0;
}

}  // namespace lsa::num
