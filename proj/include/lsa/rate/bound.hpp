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
#include <optional>
#include <string_view>

#include "lsa/channel/scenario.hpp"
#include "lsa/rate/lemmas.hpp"

namespace lsa::rate {

enum class BeamformerKind { kMF, kSZF };

std::string_view to_string(BeamformerKind k);

/// Beamformer kinds of TX 1 and TX 2, in that order.
using KindPair = std::array<BeamformerKind, 2>;
/// Slow average powers of TX 1 and TX 2.
using PowerPair = std::array<double, 2>;
/// Unit-norm statistical zero-forcing vectors of TX 1 and TX 2.
using SzfVectors = std::array<CVector, 2>;

struct RateBound {
  double value = 0.0;  // bits/s/Hz
  int receiver = kIncumbent;
  bool is_lower_bound = true;
};

/// Jensen lower bound on the ergodic rate of `receiver`.
///
/// The receiver sees gamma = p_own / (N0 + p_other * I), where I is the
/// mean leakage of the interfering beam into this receiver: u^H R u for a
/// fixed sZF beam, or the matched-filter ratio expectation when the
/// interferer steers along its own direct channel. The desired term is the
/// exact ergodic rate for that gamma (MF: all eigenvalues of the direct
/// covariance; sZF: the single projected eigenvalue). With p_other = 0
/// the bound is exact and is_lower_bound is false.
RateBound bound_rate(int receiver, const KindPair& kinds, const PowerPair& powers,
                     const channel::CovarianceSet& cov, const SzfVectors* szf = nullptr,
                     EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

/// bound_rate with every covariance-dependent quantity precomputed, for
/// evaluation inside power-control loops.
class RateContext {
 public:
  RateContext(const channel::CovarianceSet& cov, std::optional<SzfVectors> szf,
              EigenvaluePolicy policy = EigenvaluePolicy::kStrict);

  RateBound bound(int receiver, const KindPair& kinds, const PowerPair& powers) const;

  /// Mean leakage into `receiver` from the other TX using `kind`.
  double interference_gain(int receiver, BeamformerKind kind) const;

  const channel::CovarianceSet& covariances() const { return cov_; }
  const std::optional<SzfVectors>& szf() const { return szf_; }

 private:
  channel::CovarianceSet cov_;
  std::optional<SzfVectors> szf_;
  EigenvaluePolicy policy_;
  std::array<Eigen::VectorXd, 2> direct_eigs_;
  std::array<std::optional<double>, 2> mf_leak_;   // per receiver
  std::array<std::optional<double>, 2> szf_leak_;  // per receiver
  std::array<std::optional<double>, 2> szf_gain_;  // w^H R_ii w per receiver
};

}  // namespace lsa::rate
