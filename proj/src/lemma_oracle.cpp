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

#include "lsa/sim/lemma_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lsa/error.hpp"
#include "lsa/rate/lemmas.hpp"
#include "lsa/sim/parallel.hpp"
#include "lsa/simd/kernels.hpp"

namespace lsa::sim {
namespace {

using simd::ComplexBlock;

// Runs per-block sampling of x ~ CN(0, I_dim); `per_block` maps the block
// of draws to per-draw values accumulated into the estimate.
template <typename PerBlock>
OracleEstimate sample_blocks(int dim, const OracleOptions& opts, PerBlock&& per_block) {
  if (opts.n_samples < 2 || opts.block_size == 0) throw ValidationError("oracle: bad sample configuration");
  const std::size_t n_blocks = (opts.n_samples + opts.block_size - 1) / opts.block_size;
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<SampleMoments> stats(n_blocks);
  struct Scratch {
    ComplexBlock x;
    std::vector<double> values;
  };
  std::vector<Scratch> scratch(workers);
  parallel_for(n_blocks, workers, [&](std::size_t block, unsigned w) {
    Scratch& sc = scratch[w];
    const std::size_t begin = block * opts.block_size;
    const std::size_t count = std::min(opts.block_size, opts.n_samples - begin);
    sc.x.resize(dim, count);
    sc.values.resize(count);
    channel::RngStream rng(opts.seed, opts.stream, block);
    for (std::size_t b = 0; b < count; ++b) {
      for (int m = 0; m < dim; ++m) sc.x.set(m, b, rng.cscg());
    }
    per_block(sc.x, sc.values, w);
    for (double v : sc.values) stats[block].add(v);
  });
  SampleMoments total;
  for (const auto& s : stats) total.merge(s);
  return {total.mean(), total.std_error(), total.n};
}

}  // namespace

OracleEstimate mc_log_norm_rate(double gamma, const num::HermitianMatrix& r, const OracleOptions& opts) {
  const simd::PlanarMatrix s(num::psd_sqrt(r).matrix());
  const auto& k = simd::active_kernels();
  std::vector<ComplexBlock> h(resolve_workers(opts.workers));
  return sample_blocks(r.dim(), opts, [&](const ComplexBlock& x, std::vector<double>& out, unsigned w) {
    simd::mix(k, s, x, h[w]);
    simd::norm2(k, h[w], out.data());
    for (double& v : out) v = std::log1p(gamma * v) / std::numbers::ln2;
  });
}

OracleEstimate mc_log_proj_rate(double gamma, const num::HermitianMatrix& r, const num::CVector& w_vec,
                                const OracleOptions& opts) {
  const simd::PlanarMatrix s(num::psd_sqrt(r).matrix());
  const auto& k = simd::active_kernels();
  std::vector<ComplexBlock> h(resolve_workers(opts.workers));
  return sample_blocks(r.dim(), opts, [&](const ComplexBlock& x, std::vector<double>& out, unsigned w) {
    simd::mix(k, s, x, h[w]);
    simd::proj_abs2(k, h[w], w_vec, out.data());
    for (double& v : out) v = std::log1p(gamma * v) / std::numbers::ln2;
  });
}

OracleEstimate mc_quadratic_ratio(const num::HermitianMatrix& a, const num::HermitianMatrix& b,
                                  const OracleOptions& opts) {
  if (a.dim() != b.dim()) throw ValidationError("mc_quadratic_ratio: dimension mismatch");
  // x^H M x = ||M^{1/2} x||^2
  const simd::PlanarMatrix sa(num::psd_sqrt(a).matrix());
  const simd::PlanarMatrix sb(num::psd_sqrt(b).matrix());
  const auto& k = simd::active_kernels();
  const unsigned workers = resolve_workers(opts.workers);
  std::vector<ComplexBlock> ya(workers), yb(workers);
  std::vector<std::vector<double>> den(workers);
  return sample_blocks(a.dim(), opts, [&](const ComplexBlock& x, std::vector<double>& out, unsigned w) {
    simd::mix(k, sa, x, ya[w]);
    simd::mix(k, sb, x, yb[w]);
    den[w].resize(x.count);
    simd::norm2(k, ya[w], den[w].data());
    simd::norm2(k, yb[w], out.data());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= den[w][i];
  });
}

num::CMatrix random_unitary(int n, channel::RngStream& rng) {
  num::CMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.cscg();
  }
  Eigen::HouseholderQR<num::CMatrix> qr(g);
  num::CMatrix q = qr.householderQ();
  const num::CMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    const double mag = std::abs(rr(c, c));
    if (mag > 0.0) q.col(c) *= rr(c, c) / mag;
  }
  return q;
}

num::RVector random_distinct_spectrum(int n, channel::RngStream& rng, double lo, double hi, double min_rel_gap) {
  num::RVector v(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int k = 0; k < n; ++k) v(k) = lo + (hi - lo) * rng.uniform();
    std::sort(v.data(), v.data() + n);
    bool ok = true;
    for (int k = 1; k < n && ok; ++k) ok = (v(k) - v(k - 1)) >= min_rel_gap * v(k);
    if (ok) return v;
  }
  throw Error("random_distinct_spectrum: could not satisfy the gap constraint");
}

num::HermitianMatrix random_with_spectrum(const num::RVector& spectrum, channel::RngStream& rng) {
  const num::CMatrix u = random_unitary(static_cast<int>(spectrum.size()), rng);
  return num::HermitianMatrix::symmetrize(u * spectrum.cast<num::Complex>().asDiagonal() * u.adjoint());
}

num::HermitianMatrix random_psd(int n, channel::RngStream& rng) {
  num::CMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.cscg();
  }
  return num::HermitianMatrix::symmetrize(g * g.adjoint() / static_cast<double>(n));
}

num::CVector random_unit_vector(int n, channel::RngStream& rng) {
  num::CVector v(n);
  for (int k = 0; k < n; ++k) v(k) = rng.cscg();
  return v / v.norm();
}

double LemmaCheck::z_score() const {
  if (oracle.std_error <= 0.0) return closed_form == oracle.mean ? 0.0 : INFINITY;
  return (closed_form - oracle.mean) / oracle.std_error;
}

bool LemmaCheck::within(double n_se) const { return std::abs(closed_form - oracle.mean) <= n_se * oracle.std_error; }

std::vector<LemmaCheck> verify_lemmas(std::size_t samples, std::size_t cases, std::uint64_t seed, unsigned workers) {
  std::vector<LemmaCheck> out;
  channel::RngStream rng(seed, 0xC0FFEE);
  for (std::size_t c = 0; c < cases; ++c) {
    const int dim = 2 + static_cast<int>(c % 5);
    OracleOptions opts;
    opts.seed = seed;
    opts.workers = workers;
    opts.n_samples = samples;

    {
      const num::HermitianMatrix r = random_with_spectrum(random_distinct_spectrum(dim, rng), rng);
      const double gamma = 0.5 + 19.5 * rng.uniform();
      const num::RVector eig = num::eigenvalues(r);
      opts.stream = 3 * c;
      out.push_back({"lemma1", dim,
                     rate::lemma1_rate(gamma, std::span<const double>(eig.data(), static_cast<std::size_t>(dim))),
                     mc_log_norm_rate(gamma, r, opts)});
    }
    {
      const num::HermitianMatrix r = random_psd(dim, rng);
      const num::CVector w = random_unit_vector(dim, rng);
      const double gamma = 0.5 + 19.5 * rng.uniform();
      opts.stream = 3 * c + 1;
      out.push_back({"lemma2", dim, rate::lemma2_rate(gamma, r, w), mc_log_proj_rate(gamma, r, w, opts)});
    }
    {
      const num::HermitianMatrix a = random_with_spectrum(random_distinct_spectrum(dim, rng), rng);
      const num::HermitianMatrix b = random_psd(dim, rng);
      opts.stream = 3 * c + 2;
      opts.n_samples = 10 * samples;
      out.push_back({"lemma3", dim, rate::lemma3_ratio_expectation(a, b), mc_quadratic_ratio(a, b, opts)});
    }
  }
  return out;
}

}  // namespace lsa::sim
