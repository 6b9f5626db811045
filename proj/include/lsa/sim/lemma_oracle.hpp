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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lsa/channel/rng.hpp"
#include "lsa/numerics/hermitian.hpp"

// Sampling estimates of the expectations that the rate engine evaluates in
// closed form. They draw Gaussian vectors and average the raw quantity, so
// they share no code path with the closed forms they are compared to.

namespace lsa::sim {

struct OracleOptions {
  std::uint64_t seed = 7;
  std::uint64_t stream = 0;
  std::size_t n_samples = 1000000;
  unsigned workers = 0;
  std::size_t block_size = 4096;
};

struct OracleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// E[log2(1 + gamma ||h||^2)], h ~ CN(0, R).
OracleEstimate mc_log_norm_rate(double gamma, const num::HermitianMatrix& r, const OracleOptions& opts);
/// E[log2(1 + gamma |h^H w|^2)], h ~ CN(0, R).
OracleEstimate mc_log_proj_rate(double gamma, const num::HermitianMatrix& r, const num::CVector& w,
                                const OracleOptions& opts);
/// E[x^H B x / x^H A x], x ~ CN(0, I).
OracleEstimate mc_quadratic_ratio(const num::HermitianMatrix& a, const num::HermitianMatrix& b,
                                  const OracleOptions& opts);

/// Haar-random unitary via QR of a complex Gaussian matrix.
num::CMatrix random_unitary(int n, channel::RngStream& rng);
/// Ascending spectrum in [lo, hi] with pairwise relative gaps >= min_rel_gap.
num::RVector random_distinct_spectrum(int n, channel::RngStream& rng, double lo = 0.2, double hi = 3.0,
                                      double min_rel_gap = 0.05);
num::HermitianMatrix random_with_spectrum(const num::RVector& spectrum, channel::RngStream& rng);
/// G G^H / n with G complex Gaussian: PSD, almost surely full rank.
num::HermitianMatrix random_psd(int n, channel::RngStream& rng);
num::CVector random_unit_vector(int n, channel::RngStream& rng);

struct LemmaCheck {
  std::string lemma;  // "lemma1" | "lemma2" | "lemma3"
  int dim = 0;
  double closed_form = 0.0;
  OracleEstimate oracle;

  double z_score() const;
  bool within(double n_se) const;
};

/// Closed form vs sampling on `cases` randomized inputs per lemma (dims
/// cycle 2..6). Lemmas 1 and 2 use `samples` draws, lemma 3 uses
/// 10 * samples.
std::vector<LemmaCheck> verify_lemmas(std::size_t samples, std::size_t cases = 20, std::uint64_t seed = 2026,
                                      unsigned workers = 0);

}  // namespace lsa::sim
