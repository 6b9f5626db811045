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

#include "lsa/rate/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "lsa/error.hpp"
#include "lsa/numerics/expint.hpp"

namespace lsa::rate {
namespace {

bool has_close_pair(std::span<const double> ascending) {
  for (std::size_t k = 1; k < ascending.size(); ++k) {
    const double scale = std::max(std::abs(ascending[k]), std::abs(ascending[k - 1]));
    if (ascending[k] - ascending[k - 1] < kDistinctRelGap * scale) return true;
  }
  return false;
}

// 1 - prod_j 1/(1 + t a_j), without cancellation for small t.
double one_minus_mgf(double t, std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += std::log1p(t * v);
  return -std::expm1(-s);
}

// Frullani form: E ln(1 + X) = int_0^inf e^{-t}/t (1 - E e^{-tX}) dt.
double lemma1_integral(double gamma_bar, std::span<const double> lambda) {
  std::vector<double> a(lambda.begin(), lambda.end());
  for (double& v : a) v *= gamma_bar;
  double slope = 0.0;
  for (double v : a) slope += v;
  auto f = [&](double t) {
    if (t < 1e-300) return slope;
    return std::exp(-t) * one_minus_mgf(t, a) / t;
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f) / std::numbers::ln2;
}

// d_i = int_0^inf (1 + t lambda_i)^{-1} prod_j (1 + t lambda_j)^{-1} dt.
Eigen::VectorXd ratio_weights_integral(const Eigen::VectorXd& lambda) {
  const Eigen::Index n = lambda.size();
  Eigen::VectorXd out(n);
  boost::math::quadrature::exp_sinh<double> integrator;
  for (Eigen::Index i = 0; i < n; ++i) {
    auto f = [&](double t) {
      double log_den = std::log1p(t * lambda(i));
      for (Eigen::Index j = 0; j < n; ++j) log_den += std::log1p(t * lambda(j));
      return std::exp(-log_den);
    };
    out(i) = integrator.integrate(f);
  }
  return out;
}

}  // namespace

double exponential_rate(double x) {
  if (!(x > kTinySnr)) return 0.0;
  return num::scaled_exp_integral_e1(1.0 / x) / std::numbers::ln2;
}

double lemma1_rate(double gamma_bar, std::span<const double> eigenvalues, EigenvaluePolicy policy) {
  if (!(gamma_bar > 0.0)) throw DomainError("lemma1_rate: gamma_bar must be > 0");
  if (eigenvalues.empty()) throw ValidationError("lemma1_rate: no eigenvalues");
  std::vector<double> lam(eigenvalues.begin(), eigenvalues.end());
  for (double v : lam) {
    if (!(v > 0.0)) throw DomainError("lemma1_rate: eigenvalues must be > 0");
  }
  std::sort(lam.begin(), lam.end());
  if (has_close_pair(lam)) {
    if (policy == EigenvaluePolicy::kStrict) {
      throw DistinctnessError("lemma1_rate: eigenvalues are not pairwise distinct");
    }
    return lemma1_integral(gamma_bar, lam);
  }

  // Weight of eigenvalue j: lambda_j^{n-1} / prod_{m != j} (lambda_j - lambda_m),
  // kept as log-magnitude plus sign. With ascending order the sign is
  // (-1)^(number of larger eigenvalues).
  const std::size_t n = lam.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double term = exponential_rate(gamma_bar * lam[j]);
    if (term == 0.0) continue;
    double log_mag = static_cast<double>(n - 1) * std::log(lam[j]);
    for (std::size_t m = 0; m < n; ++m) {
      if (m != j) log_mag -= std::log(std::abs(lam[j] - lam[m]));
    }
    const double sign = ((n - 1 - j) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::exp(log_mag + std::log(term));
  }
  return std::max(sum, 0.0);
}

double lemma2_rate(double gamma_bar, const HermitianMatrix& r_h, const CVector& w) {
  if (!(gamma_bar > 0.0)) throw DomainError("lemma2_rate: gamma_bar must be > 0");
  if (w.size() != r_h.dim()) throw ValidationError("lemma2_rate: dimension mismatch");
  if (std::abs(w.norm() - 1.0) > 1e-10) throw ValidationError("lemma2_rate: w must have unit norm");
  if (num::eigenvalues(r_h)(0) < -num::kPsdTol) throw NotPsdError("lemma2_rate: r_h is not PSD");
  // Sole nonzero eigenvalue of R^{1/2} w w^H R^{1/2}.
  const double lambda1 = r_h.quadratic_form(w);
  if (lambda1 <= 1e-14) return 0.0;
  return exponential_rate(gamma_bar * lambda1);
}

Eigen::VectorXd ratio_weights(const Eigen::VectorXd& lambda, EigenvaluePolicy policy) {
  const Eigen::Index n = lambda.size();
  if (n == 0) throw ValidationError("ratio_weights: empty spectrum");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(lambda(k) > 0.0)) throw DomainError("ratio_weights: A must be positive definite");
    if (k > 0 && lambda(k) < lambda(k - 1)) throw ValidationError("ratio_weights: eigenvalues must be ascending");
  }
  if (has_close_pair(std::span<const double>(lambda.data(), static_cast<std::size_t>(n)))) {
    if (policy == EigenvaluePolicy::kStrict) {
      throw DistinctnessError("ratio_weights: eigenvalues of A are not pairwise distinct");
    }
    return ratio_weights_integral(lambda);
  }

  const double nd = static_cast<double>(n);
  // prod_{j != k, j != skip} (lambda_k - lambda_j); skip = -1 excludes nothing.
  auto gap_product = [&](Eigen::Index k, Eigen::Index skip) {
    double p = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != k && j != skip) p *= lambda(k) - lambda(j);
    }
    return p;
  };
  Eigen::VectorXd log_term(n), denom(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    log_term(k) = std::log(lambda(k)) - num::kEulerGamma;
    denom(k) = gap_product(k, -1);
  }

  // d_i = d/d lambda_i of E[ln X], E[ln X] = sum_k lambda_k^{n-1} (ln lambda_k - gamma) / denom_k.
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double li = lambda(i);
    double denom_slope = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != i) denom_slope += gap_product(i, r);
    }
    double v = std::pow(li, nd - 2.0) * ((nd - 1.0) * log_term(i) + 1.0) / denom(i) -
               std::pow(li, nd - 1.0) * log_term(i) * denom_slope / (denom(i) * denom(i));
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == i) continue;
      v += std::pow(lambda(k), nd - 1.0) * log_term(k) * gap_product(k, i) / (denom(k) * denom(k));
    }
    d(i) = v;
  }
  return d;
}

double lemma3_ratio_expectation(const HermitianMatrix& a, const HermitianMatrix& b, EigenvaluePolicy policy) {
  if (a.dim() != b.dim()) throw ValidationError("lemma3: A and B dimensions differ");
  if (num::eigenvalues(b)(0) < -num::kPsdTol) throw NotPsdError("lemma3: B is not PSD");
  const num::EigenSystem es = num::eigh(a);
  const Eigen::VectorXd d = ratio_weights(es.values, policy);
  const num::CMatrix bt = es.vectors.adjoint() * b.matrix() * es.vectors;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) sum += bt(i, i).real() * d(i);
  return std::max(sum, 0.0);
}

double mf_interference_gain(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross, EigenvaluePolicy policy) {
  if (r_direct.dim() != r_cross.dim()) throw ValidationError("mf_interference_gain: dimension mismatch");
  const HermitianMatrix s = num::psd_sqrt(r_direct);
  const HermitianMatrix b = HermitianMatrix::symmetrize(s.matrix() * r_cross.matrix() * s.matrix());
  return lemma3_ratio_expectation(r_direct, b, policy);
}

}  // namespace lsa::rate
