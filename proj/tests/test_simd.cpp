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

#include <doctest.h>

#include <cmath>
#include <random>

#include "lsa/simd/kernels.hpp"

using namespace lsa;
using namespace lsa::simd;

namespace {

ComplexBlock random_block(int dim, std::size_t count, std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  ComplexBlock b(dim, count);
  for (auto& v : b.re) v = nd(gen);
  for (auto& v : b.im) v = nd(gen);
  return b;
}

num::CMatrix random_matrix(int r, int c, std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  num::CMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = {nd(gen), nd(gen)};
  }
  return m;
}

void check_close(const std::vector<double>& a, const std::vector<double>& b, double rel) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i] - b[i]) <= rel * std::max(1.0, std::abs(b[i])));
  }
}

const KernelTable* vector_table() {
  const KernelTable* t = avx2_kernels();
  if (t == nullptr) MESSAGE("AVX2 kernels unavailable on this build/CPU; equivalence checks skipped");
  return t;
}

}  // namespace

TEST_CASE("scalar kernels match a direct Eigen evaluation") {
  std::mt19937_64 gen(1);
  const KernelTable& k = scalar_kernels();
  const num::CMatrix s = random_matrix(3, 4, gen);
  const ComplexBlock z = random_block(4, 7, gen);
  ComplexBlock h;
  mix(k, PlanarMatrix(s), z, h);
  std::vector<double> n2(7), pr(7), pa(7);
  norm2(k, h, n2.data());
  const num::CVector u = random_matrix(3, 1, gen).col(0);
  proj_abs2(k, h, u, pr.data());
  const ComplexBlock g = random_block(3, 7, gen);
  pair_abs2(k, g, h, pa.data());
  for (std::size_t b = 0; b < 7; ++b) {
    num::CVector zb(4), hb(3), gb(3);
    for (int m = 0; m < 4; ++m) zb(m) = z.at(m, b);
    for (int m = 0; m < 3; ++m) gb(m) = g.at(m, b);
    hb = s * zb;
    for (int m = 0; m < 3; ++m) CHECK(std::abs(h.at(m, b) - hb(m)) < 1e-12);
    CHECK(n2[b] == doctest::Approx(hb.squaredNorm()).epsilon(1e-13));
    CHECK(pr[b] == doctest::Approx(std::norm(u.dot(hb))).epsilon(1e-12));
    CHECK(pa[b] == doctest::Approx(std::norm(gb.dot(hb))).epsilon(1e-12));
  }
}

TEST_CASE("AVX2 kernels match the scalar reference, including ragged tails") {
  const KernelTable* v = vector_table();
  if (v == nullptr) return;
  CHECK(v->isa == Isa::kAvx2);
  const KernelTable& s = scalar_kernels();
  std::mt19937_64 gen(2);
  for (int dim = 1; dim <= 6; ++dim) {
    for (std::size_t count : {1u, 3u, 4u, 5u, 8u, 17u, 1023u, 1024u}) {
      CAPTURE(dim);
      CAPTURE(count);
      const PlanarMatrix m(random_matrix(dim, dim, gen));
      const ComplexBlock z = random_block(dim, count, gen);
      ComplexBlock hs, hv;
      mix(s, m, z, hs);
      mix(*v, m, z, hv);
      check_close(hs.re, hv.re, 1e-12);
      check_close(hs.im, hv.im, 1e-12);

      std::vector<double> a(count), b(count);
      norm2(s, hs, a.data());
      norm2(*v, hs, b.data());
      check_close(a, b, 1e-12);

      const num::CVector u = random_matrix(dim, 1, gen).col(0);
      proj_abs2(s, hs, u, a.data());
      proj_abs2(*v, hs, u, b.data());
      check_close(a, b, 1e-12);

      pair_abs2(s, z, hs, a.data());
      pair_abs2(*v, z, hs, b.data());
      check_close(a, b, 1e-12);

      std::vector<double> sig(a), intf(count), outs(count), outv(count);
      norm2(s, z, intf.data());
      s.sinr(sig.data(), intf.data(), count, 3.0, 1.0, 0.7, outs.data());
      v->sinr(sig.data(), intf.data(), count, 3.0, 1.0, 0.7, outv.data());
      check_close(outs, outv, 1e-14);
    }
  }
}

TEST_CASE("active kernel selection") {
  const KernelTable& a = active_kernels();
  CHECK(a.name != nullptr);
  if (avx2_kernels() == nullptr) CHECK(a.isa == Isa::kScalar);
}
