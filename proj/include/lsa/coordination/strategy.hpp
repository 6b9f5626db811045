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
#include <string>

#include "lsa/channel/scenario.hpp"
#include "lsa/coordination/beamformer.hpp"
#include "lsa/rate/bound.hpp"

namespace lsa::coord {

using rate::RateBound;

/// Which TX transmits at its maximum average power.
enum class PowerPolicy { kP1Full, kP2Full };

std::string_view to_string(PowerPolicy p);

inline constexpr double kBisectionTol = 1e-8;
inline constexpr int kBisectionMaxIter = 200;

struct Strategy {
  BeamformerKind kind1 = BeamformerKind::kMF;
  BeamformerKind kind2 = BeamformerKind::kMF;
  PowerPolicy policy = PowerPolicy::kP1Full;
  double p1 = 0.0;
  double p2 = 0.0;
  bool feasible = false;
  bool interior = false;  // the controlled TX ended strictly inside (0, P_max)
  RateBound licensee_bound{0.0, kLicensee, true};
  RateBound incumbent_bound{0.0, kIncumbent, true};

  rate::KindPair kinds() const { return {kind1, kind2}; }
  rate::PowerPair powers() const { return {p1, p2}; }
  /// e.g. "MF-SZF-P1"
  std::string name() const;
};

/// Table position: lexicographic on (policy, kind1, kind2), MF before SZF.
constexpr std::size_t strategy_index(PowerPolicy policy, BeamformerKind k1, BeamformerKind k2) {
  return static_cast<std::size_t>(policy) * 4 + static_cast<std::size_t>(k1) * 2 + static_cast<std::size_t>(k2);
}

/// Whether tau1 is reachable by TX 1 alone at full power with MF, i.e. the
/// interference-free ergodic rate E[log2(1 + P1 ||h11||^2 / N0)] >= tau1.
bool check_feasibility(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                       rate::EigenvaluePolicy policy = rate::EigenvaluePolicy::kStrict);

struct PowerResolution {
  double p1 = 0.0;
  double p2 = 0.0;
  bool feasible = false;
  bool interior = false;
};

/// Fixes the full-power TX of `policy` at its budget and bisects the other
/// TX's power so that the incumbent lower bound meets tau1: the largest p2
/// under P1 (the bound falls with p2), the smallest p1 under P2 (the bound
/// rises with p1). A slack constraint leaves both at full power. An
/// unreachable constraint returns feasible = false with the boundary
/// attempt (p2 = 0 under P1, p1 = P1max under P2).
PowerResolution resolve_power(const rate::KindPair& kinds, PowerPolicy policy, const rate::RateContext& ctx,
                              const channel::ScenarioConfig& cfg);

PowerResolution resolve_power(const rate::KindPair& kinds, PowerPolicy policy, const channel::CovarianceSet& cov,
                              const channel::ScenarioConfig& cfg, const rate::SzfVectors& szf);

struct StrategyTable {
  std::array<Strategy, 8> entries;
  std::size_t selected = 0;
  rate::SzfVectors szf;

  const Strategy& best() const { return entries[selected]; }
};

/// Resolves all 8 (kind1, kind2, policy) strategies and selects the
/// feasible one with the largest licensee bound; ties go to the lowest
/// table index. Uses only (cfg, cov). Throws InfeasibleError when
/// check_feasibility fails.
StrategyTable select_strategy(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                              rate::EigenvaluePolicy policy = rate::EigenvaluePolicy::kStrict);

}  // namespace lsa::coord
