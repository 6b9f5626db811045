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

#include <string_view>

#include "lsa/channel/scenario.hpp"
#include "lsa/rate/bound.hpp"

namespace lsa::baseline {

enum class BaselineScheme { kInterferenceTemperature, kBenchmark };

std::string_view to_string(BaselineScheme s);

struct BaselineResult {
  BaselineScheme scheme = BaselineScheme::kInterferenceTemperature;
  double p1 = 0.0;
  double p2 = 0.0;
  double interference_threshold = 0.0;  // interference temperature only
  rate::RateBound incumbent_rate{0.0, kIncumbent, true};
  rate::RateBound licensee_rate{0.0, kLicensee, true};
  // Interference temperature: TX 2's sZF beam. Benchmark: unused.
  num::CVector tx2_beam;
  // Benchmark: lambda_min(R_12) and lambda_min(R_21), the idealized
  // per-unit-power interference seen at RX 1 and RX 2.
  std::array<double, 2> ideal_leakage{0.0, 0.0};
};

/// Underlay reference: TX 1 at full power with MF; TX 2 uses its sZF beam
/// at p2 = min(I / u^H R_12 u, P2max), where the interference threshold I
/// is bisected so that E[log2(1 + P1 ||h11||^2 / (N0 + I))] = tau1.
/// Throws InfeasibleError when tau1 is unreachable even with I = 0.
BaselineResult interference_temperature_scheme(const channel::ScenarioConfig& cfg,
                                               const channel::CovarianceSet& cov,
                                               rate::EigenvaluePolicy policy = rate::EigenvaluePolicy::kStrict);

/// Idealized upper benchmark: both links enjoy the full MF gain ||h_ii||^2
/// while the interference is only lambda_min of the cross covariance.
/// Solved by fixing one TX at full power and bisecting the other, taking
/// the better feasible candidate (P1 full wins ties). Throws
/// InfeasibleError when neither candidate is feasible.
BaselineResult coordination_benchmark(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                                      rate::EigenvaluePolicy policy = rate::EigenvaluePolicy::kStrict);

}  // namespace lsa::baseline
