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

#include "lsa/sim/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "lsa/channel/rng.hpp"
#include "lsa/error.hpp"
#include "lsa/sim/parallel.hpp"
#include "lsa/simd/kernels.hpp"

namespace lsa::sim {

double SampleMoments::std_error() const {
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  const double m = sum.value() / nd;
  const double var = (sum_sq.value() - nd * m * m) / (nd - 1.0);
  return std::sqrt(std::max(var, 0.0) / nd);
}

SchemeSpec scheme_from_strategy(const coord::Strategy& s, const rate::SzfVectors& szf) {
  SchemeSpec out;
  out.kinds = s.kinds();
  out.powers = s.powers();
  out.szf = szf;
  return out;
}

SchemeSpec scheme_from_baseline(const baseline::BaselineResult& b, const rate::SzfVectors& szf) {
  SchemeSpec out;
  out.powers = {b.p1, b.p2};
  out.szf = szf;
  if (b.scheme == baseline::BaselineScheme::kBenchmark) {
    out.mode = SchemeSpec::Mode::kIdealBenchmark;
    out.ideal_leakage = b.ideal_leakage;
  } else {
    out.kinds = {rate::BeamformerKind::kMF, rate::BeamformerKind::kSZF};
    out.szf[kLicensee] = b.tx2_beam;
  }
  return out;
}

namespace {

using simd::ComplexBlock;

struct Scratch {
  std::array<std::array<ComplexBlock, 2>, 2> z;
  std::array<std::array<ComplexBlock, 2>, 2> h;
  std::array<std::vector<double>, 2> direct_norm2;
  std::array<std::vector<double>, 2> mf_leak;
  std::vector<double> sig, intf, zeros, sinr;
};

void validate(const SchemeSpec& s, const channel::CovarianceSet& cov) {
  for (int i = 0; i < 2; ++i) {
    if (!(s.powers[i] >= 0.0)) throw ValidationError("mc_ergodic_rates: powers must be >= 0");
    if (s.mode == SchemeSpec::Mode::kBeamformed && s.kinds[i] == rate::BeamformerKind::kSZF &&
        s.szf[i].size() != cov.link(i, i).dim()) {
      throw ValidationError("mc_ergodic_rates: missing sZF vector");
    }
  }
}

}  // namespace

std::vector<McRates> mc_ergodic_rates(std::span<const SchemeSpec> schemes, const channel::CovarianceSet& cov,
                                      const McOptions& opts) {
  if (opts.n_samples < kMinSamples) throw ValidationError("mc_ergodic_rates: need at least 100 samples");
  if (opts.block_size == 0) throw ValidationError("mc_ergodic_rates: block size must be positive");
  for (const auto& s : schemes) validate(s, cov);

  const channel::ChannelSampler sampler(cov);
  std::array<std::array<simd::PlanarMatrix, 2>, 2> sqrt_planar;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sqrt_planar[i][j] = simd::PlanarMatrix(sampler.sqrt_cov(i, j).matrix());
  }
  const simd::KernelTable& kern = simd::active_kernels();

  const std::size_t n_blocks = (opts.n_samples + opts.block_size - 1) / opts.block_size;
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<std::vector<std::array<SampleMoments, 2>>> block_stats(
      n_blocks, std::vector<std::array<SampleMoments, 2>>(schemes.size()));
  std::vector<Scratch> scratch(workers);

  parallel_for(n_blocks, workers, [&](std::size_t block, unsigned w) {
    Scratch& sc = scratch[w];
    const std::size_t begin = block * opts.block_size;
    const std::size_t count = std::min(opts.block_size, opts.n_samples - begin);

    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) sc.z[i][j].resize(sampler.sqrt_cov(i, j).dim(), count);
    }
    channel::RngStream rng(opts.seed, opts.stream, block);
    for (std::size_t b = 0; b < count; ++b) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int m = 0; m < sc.z[i][j].dim; ++m) sc.z[i][j].set(m, b, rng.cscg());
        }
      }
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) simd::mix(kern, sqrt_planar[i][j], sc.z[i][j], sc.h[i][j]);
    }
    for (int i = 0; i < 2; ++i) {
      sc.direct_norm2[i].resize(count);
      simd::norm2(kern, sc.h[i][i], sc.direct_norm2[i].data());
    }
    // Leakage of the other TX's matched filter into receiver i:
    // |h_{i,o}^H h_{o,o}|^2 / ||h_{o,o}||^2.
    for (int i = 0; i < 2; ++i) {
      const int o = other(i);
      sc.mf_leak[i].resize(count);
      simd::pair_abs2(kern, sc.h[i][o], sc.h[o][o], sc.mf_leak[i].data());
      for (std::size_t b = 0; b < count; ++b) {
        const double n2 = sc.direct_norm2[o][b];
        sc.mf_leak[i][b] = n2 > 0.0 ? sc.mf_leak[i][b] / n2 : 0.0;
      }
    }
    sc.sig.resize(count);
    sc.intf.resize(count);
    sc.sinr.resize(count);
    sc.zeros.assign(count, 0.0);

    for (std::size_t s = 0; s < schemes.size(); ++s) {
      const SchemeSpec& spec = schemes[s];
      for (int i = 0; i < 2; ++i) {
        const int o = other(i);
        const double* sig = sc.direct_norm2[i].data();
        const double* intf = sc.zeros.data();
        double n0 = cov.n0;
        double p_int = spec.powers[o];
        if (spec.mode == SchemeSpec::Mode::kIdealBenchmark) {
          n0 += spec.powers[o] * spec.ideal_leakage[i];
          p_int = 0.0;
        } else {
          if (spec.kinds[i] == rate::BeamformerKind::kSZF) {
            simd::proj_abs2(kern, sc.h[i][i], spec.szf[i], sc.sig.data());
            sig = sc.sig.data();
          }
          if (spec.kinds[o] == rate::BeamformerKind::kMF) {
            intf = sc.mf_leak[i].data();
          } else {
            simd::proj_abs2(kern, sc.h[i][o], spec.szf[o], sc.intf.data());
            intf = sc.intf.data();
          }
        }
        kern.sinr(sig, intf, count, spec.powers[i], n0, p_int, sc.sinr.data());
        SampleMoments& acc = block_stats[block][s][i];
        for (std::size_t b = 0; b < count; ++b) acc.add(std::log1p(sc.sinr[b]) / std::numbers::ln2);
      }
    }
  });

  std::vector<McRates> out(schemes.size());
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    for (int i = 0; i < 2; ++i) {
      SampleMoments total;
      for (std::size_t block = 0; block < n_blocks; ++block) total.merge(block_stats[block][s][i]);
      out[s].mean[i] = total.mean();
      out[s].std_error[i] = total.std_error();
    }
  }
  return out;
}

McRates mc_ergodic_rates(const SchemeSpec& scheme, const channel::CovarianceSet& cov, const McOptions& opts) {
  return mc_ergodic_rates(std::span<const SchemeSpec>(&scheme, 1), cov, opts)[0];
}

}  // namespace lsa::sim
