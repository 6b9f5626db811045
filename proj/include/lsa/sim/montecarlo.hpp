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
#include <span>
#include <vector>

#include "lsa/baselines/baselines.hpp"
#include "lsa/channel/scenario.hpp"
#include "lsa/coordination/strategy.hpp"
#include "lsa/rate/bound.hpp"

namespace lsa::sim {

/// How each TX forms its beam per channel draw, plus its slow power.
struct SchemeSpec {
  enum class Mode {
    kBeamformed,  // MF from the drawn direct link, or a fixed sZF vector
    kIdealBenchmark,  // MF gain with interference fixed at p_other * ideal_leakage
  };
  Mode mode = Mode::kBeamformed;
  rate::KindPair kinds{rate::BeamformerKind::kMF, rate::BeamformerKind::kMF};
  rate::PowerPair powers{0.0, 0.0};
  rate::SzfVectors szf;                 // used for sZF kinds
  std::array<double, 2> ideal_leakage{0.0, 0.0};  // per receiver, benchmark only
};

SchemeSpec scheme_from_strategy(const coord::Strategy& s, const rate::SzfVectors& szf);
SchemeSpec scheme_from_baseline(const baseline::BaselineResult& b, const rate::SzfVectors& szf);

inline constexpr std::size_t kMinSamples = 100;

struct McOptions {
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::size_t n_samples = 20000;
  unsigned workers = 0;  // 0: hardware concurrency
  std::size_t block_size = 1024;
};

struct McRates {
  std::array<double, 2> mean{0.0, 0.0};
  std::array<double, 2> std_error{0.0, 0.0};
};

/// Ergodic rates of both receivers for every scheme, evaluated on one
/// shared set of channel draws (common random numbers). Draw block b comes
/// from RngStream(seed, stream, b) and is consumed exactly like repeated
/// ChannelSampler::draw calls, so results are identical for any worker
/// count.
std::vector<McRates> mc_ergodic_rates(std::span<const SchemeSpec> schemes, const channel::CovarianceSet& cov,
                                      const McOptions& opts);

McRates mc_ergodic_rates(const SchemeSpec& scheme, const channel::CovarianceSet& cov, const McOptions& opts);

}  // namespace lsa::sim
