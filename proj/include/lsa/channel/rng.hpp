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
#include <cstdint>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace lsa::channel {

/// Independent, reproducible random stream keyed by (seed, stream,
/// substream). Distinct keys give statistically independent sequences;
/// the same key always reproduces the same sequence, regardless of which
/// thread consumes it.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::uint64_t next_u64() { return engine_(); }

  /// Standard circularly-symmetric complex Gaussian: real and imaginary
  /// parts independent with variance 1/2 each.
  std::complex<double> cscg();

 private:
  boost::random::mt19937_64 engine_;
  boost::random::normal_distribution<double> normal_;
  boost::random::uniform_01<double> uniform_;
};

}  // namespace lsa::channel
