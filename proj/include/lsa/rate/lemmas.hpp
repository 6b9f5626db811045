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

#include <span>

#include "lsa/numerics/hermitian.hpp"

namespace lsa::rate {

using num::CVector;
using num::HermitianMatrix;

/// How the closed forms react to (near) repeated eigenvalues, where the
/// sums over eigenvalue-gap products are singular.
enum class EigenvaluePolicy {
  kStrict,            // throw DistinctnessError
  kIntegralFallback,  // evaluate the Laplace-transform integral instead
};

/// Minimum pairwise relative gap |a-b| / max(|a|,|b|) for "distinct".
inline constexpr double kDistinctRelGap = 1e-9;

/// Below this value of gamma*lambda the single-exponential rate term is 0.
inline constexpr double kTinySnr = 1e-12;

/// (1/ln 2) e^{1/x} E1(1/x): ergodic rate E[log2(1 + x |z|^2)], z ~ CN(0,1).
double exponential_rate(double x);

/// E[log2(1 + gamma_bar ||h||^2)] for h ~ CN(0, R) where R has the given
/// pairwise-distinct positive eigenvalues. The result does not depend on
/// the order of `eigenvalues`.
double lemma1_rate(double gamma_bar, std::span<const double> eigenvalues,
                   EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

/// E[log2(1 + gamma_bar |h^H w|^2)] for h ~ CN(0, r_h) and unit w.
double lemma2_rate(double gamma_bar, const HermitianMatrix& r_h, const CVector& w);

/// Per-eigenvalue weights d_i = E[|x_i|^2 / sum_j lambda_j |x_j|^2] for
/// x ~ CN(0, I), so that E[x^H B x / x^H A x] = sum_i Btilde_ii d_i.
/// `lambda` must be ascending.
Eigen::VectorXd ratio_weights(const Eigen::VectorXd& lambda,
                              EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

/// E[x^H B x / x^H A x] for x ~ CN(0, I), A positive definite with
/// distinct eigenvalues, B positive semi-definite.
double lemma3_ratio_expectation(const HermitianMatrix& a, const HermitianMatrix& b,
                                EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

/// E[h^H R_cross h / ||h||^2] for h ~ CN(0, R_direct): the mean leakage
/// of a matched-filter beam steered along h.
double mf_interference_gain(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross,
                            EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

}  // namespace lsa::rate
