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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "lsa/channel/rng.hpp"
#include "lsa/numerics/hermitian.hpp"

namespace lsa {

/// Pair indices. Index 0 is the incumbent TX/RX pair, index 1 the licensee.
inline constexpr int kIncumbent = 0;
inline constexpr int kLicensee = 1;
constexpr int other(int i) { return 1 - i; }

}  // namespace lsa

namespace lsa::channel {

using num::CVector;
using num::HermitianMatrix;

struct ScenarioConfig {
  int m1 = 4;
  int m2 = 4;
  double p1_max = 10.0;
  double p2_max = 10.0;
  double n0 = 1.0;
  double tau1 = 1.0;
  double rho = 0.5;
  // beta[i][j]: pathloss from TX j to RX i.
  std::array<std::array<double, 2>, 2> beta{{{1.0, 0.3}, {0.3, 1.0}}};
  std::uint64_t seed = 1;
  std::size_t n_samples = 20000;

  int antennas(int tx) const { return tx == kIncumbent ? m1 : m2; }
  double p_max(int tx) const { return tx == kIncumbent ? p1_max : p2_max; }

  /// Throws ValidationError on the first violated field constraint.
  void validate() const;
};

/// Equal power budgets P1 = P2 = N0 * 10^(snr_db / 10).
ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr_db);

/// Parses `key = value` lines; `#` starts a comment. Keys: m1 m2 p1_max
/// p2_max n0 tau1 rho beta11 beta12 beta21 beta22 seed n_samples. Unknown
/// or duplicate keys and malformed values throw ValidationError. Missing
/// keys keep their defaults. The result is validated.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);
std::string format_config(const ScenarioConfig& cfg);

/// r[i][j] is the covariance of the link from TX j to RX i (dimension M_j).
struct CovarianceSet {
  std::array<std::array<HermitianMatrix, 2>, 2> r;
  double n0 = 1.0;

  const HermitianMatrix& link(int rx, int tx) const { return r[rx][tx]; }
};

/// Exponential correlation model: [R_ij]_{m,n} = beta_ij * rho^|m-n|.
CovarianceSet build_covariances(const ScenarioConfig& cfg);

/// Swaps the roles of the two pairs (R11 <-> R22, R12 <-> R21).
CovarianceSet swap_pairs(const CovarianceSet& cov);

/// One joint realization; h[i][j] is the link from TX j to RX i.
struct ChannelDraw {
  std::array<std::array<CVector, 2>, 2> h;
};

/// Caches the covariance square roots so repeated draws only cost the
/// Gaussian generation and a matrix-vector product per link.
class ChannelSampler {
 public:
  explicit ChannelSampler(const CovarianceSet& cov);

  /// Consumes, per link in order (0,0) (0,1) (1,0) (1,1), M_j CSCG
  /// variates from the stream and returns h = R^{1/2} z.
  ChannelDraw draw(RngStream& rng) const;

  const HermitianMatrix& sqrt_cov(int rx, int tx) const { return sqrt_[rx][tx]; }

 private:
  std::array<std::array<HermitianMatrix, 2>, 2> sqrt_;
};

ChannelDraw sample_channels(const CovarianceSet& cov, RngStream& rng);

}  // namespace lsa::channel
