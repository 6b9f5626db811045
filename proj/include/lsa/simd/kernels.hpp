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
#include <vector>

#include "lsa/numerics/hermitian.hpp"

// Batched complex-vector kernels for the Monte Carlo inner loops.
//
// Vectors are stored planar, one row per antenna: element m of draw b is
// (re[m * count + b], im[m * count + b]). Every kernel processes `count`
// draws at once. Each ISA provides the same table of entry points; the
// scalar table is the reference the vector tables are tested against.

namespace lsa::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // h[r] = sum_c S[r][c] z[c] for every draw; S is rows x cols, row-major.
  void (*mix)(const double* s_re, const double* s_im, int rows, int cols, const double* z_re, const double* z_im,
              std::size_t count, double* h_re, double* h_im);
  // out = ||h||^2
  void (*norm2)(const double* re, const double* im, int dim, std::size_t count, double* out);
  // out = |u^H h|^2 for a fixed vector u
  void (*proj_abs2)(const double* re, const double* im, int dim, std::size_t count, const double* u_re,
                    const double* u_im, double* out);
  // out = |a^H b|^2, both per draw
  void (*pair_abs2)(const double* a_re, const double* a_im, const double* b_re, const double* b_im, int dim,
                    std::size_t count, double* out);
  // out = p_sig * sig / (n0 + p_int * intf)
  void (*sinr)(const double* sig, const double* intf, std::size_t count, double p_sig, double n0, double p_int,
               double* out);
};

const KernelTable& scalar_kernels();

/// nullptr when AVX2/FMA support was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Best table for this CPU. Setting LSA_SIMD=scalar in the environment
/// forces the scalar reference.
const KernelTable& active_kernels();

/// Planar block of `count` complex vectors of length `dim`.
struct ComplexBlock {
  int dim = 0;
  std::size_t count = 0;
  std::vector<double> re;
  std::vector<double> im;

  ComplexBlock() = default;
  ComplexBlock(int d, std::size_t n) { resize(d, n); }

  void resize(int d, std::size_t n) {
    dim = d;
    count = n;
    re.assign(static_cast<std::size_t>(d) * n, 0.0);
    im.assign(static_cast<std::size_t>(d) * n, 0.0);
  }
  double* re_row(int m) { return re.data() + static_cast<std::size_t>(m) * count; }
  double* im_row(int m) { return im.data() + static_cast<std::size_t>(m) * count; }
  num::Complex at(int m, std::size_t b) const {
    return {re[static_cast<std::size_t>(m) * count + b], im[static_cast<std::size_t>(m) * count + b]};
  }
  void set(int m, std::size_t b, num::Complex v) {
    re[static_cast<std::size_t>(m) * count + b] = v.real();
    im[static_cast<std::size_t>(m) * count + b] = v.imag();
  }
};

/// Split a complex matrix into row-major real/imaginary planes.
struct PlanarMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> re;
  std::vector<double> im;

  PlanarMatrix() = default;
  explicit PlanarMatrix(const num::CMatrix& m);
};

// Convenience wrappers over a kernel table.
void mix(const KernelTable& k, const PlanarMatrix& s, const ComplexBlock& z, ComplexBlock& h);
void norm2(const KernelTable& k, const ComplexBlock& h, double* out);
void proj_abs2(const KernelTable& k, const ComplexBlock& h, const num::CVector& u, double* out);
void pair_abs2(const KernelTable& k, const ComplexBlock& a, const ComplexBlock& b, double* out);

}  // namespace lsa::simd
