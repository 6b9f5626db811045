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

#include <cstdlib>
#include <cstring>

#include "lsa/error.hpp"
#include "lsa/simd/kernels.hpp"

namespace lsa::simd {
namespace {

void mix_scalar(const double* s_re, const double* s_im, int rows, int cols, const double* z_re, const double* z_im,
                std::size_t count, double* h_re, double* h_im) {
  for (int r = 0; r < rows; ++r) {
    double* hr = h_re + static_cast<std::size_t>(r) * count;
    double* hi = h_im + static_cast<std::size_t>(r) * count;
    std::memset(hr, 0, count * sizeof(double));
    std::memset(hi, 0, count * sizeof(double));
    for (int c = 0; c < cols; ++c) {
      const double a = s_re[r * cols + c];
      const double b = s_im[r * cols + c];
      const double* zr = z_re + static_cast<std::size_t>(c) * count;
      const double* zi = z_im + static_cast<std::size_t>(c) * count;
      for (std::size_t k = 0; k < count; ++k) {
        hr[k] += a * zr[k] - b * zi[k];
        hi[k] += a * zi[k] + b * zr[k];
      }
    }
  }
}

void norm2_scalar(const double* re, const double* im, int dim, std::size_t count, double* out) {
  std::memset(out, 0, count * sizeof(double));
  for (int m = 0; m < dim; ++m) {
    const double* r = re + static_cast<std::size_t>(m) * count;
    const double* i = im + static_cast<std::size_t>(m) * count;
    for (std::size_t k = 0; k < count; ++k) out[k] += r[k] * r[k] + i[k] * i[k];
  }
}

void proj_abs2_scalar(const double* re, const double* im, int dim, std::size_t count, const double* u_re,
                      const double* u_im, double* out) {
  for (std::size_t k = 0; k < count; ++k) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (int m = 0; m < dim; ++m) {
      const double hr = re[static_cast<std::size_t>(m) * count + k];
      const double hi = im[static_cast<std::size_t>(m) * count + k];
      // conj(u) * h
      acc_re += u_re[m] * hr + u_im[m] * hi;
      acc_im += u_re[m] * hi - u_im[m] * hr;
    }
    out[k] = acc_re * acc_re + acc_im * acc_im;
  }
}

void pair_abs2_scalar(const double* a_re, const double* a_im, const double* b_re, const double* b_im, int dim,
                      std::size_t count, double* out) {
  for (std::size_t k = 0; k < count; ++k) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (int m = 0; m < dim; ++m) {
      const std::size_t o = static_cast<std::size_t>(m) * count + k;
      acc_re += a_re[o] * b_re[o] + a_im[o] * b_im[o];
      acc_im += a_re[o] * b_im[o] - a_im[o] * b_re[o];
    }
    out[k] = acc_re * acc_re + acc_im * acc_im;
  }
}

void sinr_scalar(const double* sig, const double* intf, std::size_t count, double p_sig, double n0, double p_int,
                 double* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = p_sig * sig[k] / (n0 + p_int * intf[k]);
}

const KernelTable kScalar{Isa::kScalar, "scalar", mix_scalar, norm2_scalar, proj_abs2_scalar, pair_abs2_scalar,
                          sinr_scalar};

}  // namespace

#if defined(LSA_HAVE_AVX2)
// kernels_avx2.cpp
const KernelTable* avx2_table_if_compiled();
#else
static const KernelTable* avx2_table_if_compiled() { return nullptr; }
#endif

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_table_if_compiled();
#endif
  return nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable* table = [] {
    const char* env = std::getenv("LSA_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
    const KernelTable* v = avx2_kernels();
    return v != nullptr ? v : &kScalar;
  }();
  return *table;
}

PlanarMatrix::PlanarMatrix(const num::CMatrix& m)
    : rows(static_cast<int>(m.rows())), cols(static_cast<int>(m.cols())), re(m.size()), im(m.size()) {
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      re[static_cast<std::size_t>(r) * cols + c] = m(r, c).real();
      im[static_cast<std::size_t>(r) * cols + c] = m(r, c).imag();
    }
  }
}

void mix(const KernelTable& k, const PlanarMatrix& s, const ComplexBlock& z, ComplexBlock& h) {
  if (s.cols != z.dim) throw ValidationError("mix: dimension mismatch");
  if (h.dim != s.rows || h.count != z.count) h.resize(s.rows, z.count);
  k.mix(s.re.data(), s.im.data(), s.rows, s.cols, z.re.data(), z.im.data(), z.count, h.re.data(), h.im.data());
}

void norm2(const KernelTable& k, const ComplexBlock& h, double* out) {
  k.norm2(h.re.data(), h.im.data(), h.dim, h.count, out);
}

void proj_abs2(const KernelTable& k, const ComplexBlock& h, const num::CVector& u, double* out) {
  if (u.size() != h.dim) throw ValidationError("proj_abs2: dimension mismatch");
  std::vector<double> ur(h.dim), ui(h.dim);
  for (int m = 0; m < h.dim; ++m) {
    ur[m] = u(m).real();
    ui[m] = u(m).imag();
  }
  k.proj_abs2(h.re.data(), h.im.data(), h.dim, h.count, ur.data(), ui.data(), out);
}

void pair_abs2(const KernelTable& k, const ComplexBlock& a, const ComplexBlock& b, double* out) {
  if (a.dim != b.dim || a.count != b.count) throw ValidationError("pair_abs2: shape mismatch");
  k.pair_abs2(a.re.data(), a.im.data(), b.re.data(), b.im.data(), a.dim, a.count, out);
}

}  // namespace lsa::simd
