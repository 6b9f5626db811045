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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#if defined(LSA_HAVE_AVX2)

#include <immintrin.h>

#include "lsa/simd/kernels.hpp"

namespace lsa::simd {
namespace {

void mix_avx2(const double* s_re, const double* s_im, int rows, int cols, const double* z_re, const double* z_im,
              std::size_t count, double* h_re, double* h_im) {
  const std::size_t vec_end = count & ~std::size_t{3};
  for (int r = 0; r < rows; ++r) {
    double* hr = h_re + static_cast<std::size_t>(r) * count;
    double* hi = h_im + static_cast<std::size_t>(r) * count;
    for (std::size_t k = 0; k < vec_end; k += 4) {
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      for (int c = 0; c < cols; ++c) {
        const __m256d a = _mm256_set1_pd(s_re[r * cols + c]);
        const __m256d b = _mm256_set1_pd(s_im[r * cols + c]);
        const __m256d zr = _mm256_loadu_pd(z_re + static_cast<std::size_t>(c) * count + k);
        const __m256d zi = _mm256_loadu_pd(z_im + static_cast<std::size_t>(c) * count + k);
        acc_re = _mm256_fmadd_pd(a, zr, acc_re);
        acc_re = _mm256_fnmadd_pd(b, zi, acc_re);
        acc_im = _mm256_fmadd_pd(a, zi, acc_im);
        acc_im = _mm256_fmadd_pd(b, zr, acc_im);
      }
      _mm256_storeu_pd(hr + k, acc_re);
      _mm256_storeu_pd(hi + k, acc_im);
    }
    for (std::size_t k = vec_end; k < count; ++k) {
      double ar = 0.0;
      double ai = 0.0;
      for (int c = 0; c < cols; ++c) {
        const double a = s_re[r * cols + c];
        const double b = s_im[r * cols + c];
        const double zr = z_re[static_cast<std::size_t>(c) * count + k];
        const double zi = z_im[static_cast<std::size_t>(c) * count + k];
        ar += a * zr - b * zi;
        ai += a * zi + b * zr;
      }
      hr[k] = ar;
      hi[k] = ai;
    }
  }
}

void norm2_avx2(const double* re, const double* im, int dim, std::size_t count, double* out) {
  const std::size_t vec_end = count & ~std::size_t{3};
  for (std::size_t k = 0; k < vec_end; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int m = 0; m < dim; ++m) {
      const __m256d r = _mm256_loadu_pd(re + static_cast<std::size_t>(m) * count + k);
      const __m256d i = _mm256_loadu_pd(im + static_cast<std::size_t>(m) * count + k);
      acc = _mm256_fmadd_pd(r, r, acc);
      acc = _mm256_fmadd_pd(i, i, acc);
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (std::size_t k = vec_end; k < count; ++k) {
    double acc = 0.0;
    for (int m = 0; m < dim; ++m) {
      const double r = re[static_cast<std::size_t>(m) * count + k];
      const double i = im[static_cast<std::size_t>(m) * count + k];
      acc += r * r + i * i;
    }
    out[k] = acc;
  }
}

void proj_abs2_avx2(const double* re, const double* im, int dim, std::size_t count, const double* u_re,
                    const double* u_im, double* out) {
  const std::size_t vec_end = count & ~std::size_t{3};
  for (std::size_t k = 0; k < vec_end; k += 4) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (int m = 0; m < dim; ++m) {
      const __m256d ur = _mm256_set1_pd(u_re[m]);
      const __m256d ui = _mm256_set1_pd(u_im[m]);
      const __m256d hr = _mm256_loadu_pd(re + static_cast<std::size_t>(m) * count + k);
      const __m256d hi = _mm256_loadu_pd(im + static_cast<std::size_t>(m) * count + k);
      acc_re = _mm256_fmadd_pd(ur, hr, acc_re);
      acc_re = _mm256_fmadd_pd(ui, hi, acc_re);
      acc_im = _mm256_fmadd_pd(ur, hi, acc_im);
      acc_im = _mm256_fnmadd_pd(ui, hr, acc_im);
    }
    _mm256_storeu_pd(out + k, _mm256_fmadd_pd(acc_re, acc_re, _mm256_mul_pd(acc_im, acc_im)));
  }
  for (std::size_t k = vec_end; k < count; ++k) {
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (int m = 0; m < dim; ++m) {
      const double hr = re[static_cast<std::size_t>(m) * count + k];
      const double hi = im[static_cast<std::size_t>(m) * count + k];
      acc_re += u_re[m] * hr + u_im[m] * hi;
      acc_im += u_re[m] * hi - u_im[m] * hr;
    }
    out[k] = acc_re * acc_re + acc_im * acc_im;
  }
}

void pair_abs2_avx2(const double* a_re, const double* a_im, const double* b_re, const double* b_im, int dim,
                    std::size_t count, double* out) {
  const std::size_t vec_end = count & ~std::size_t{3};
  for (std::size_t k = 0; k < vec_end; k += 4) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (int m = 0; m < dim; ++m) {
      const std::size_t o = static_cast<std::size_t>(m) * count + k;
      const __m256d ar = _mm256_loadu_pd(a_re + o);
      const __m256d ai = _mm256_loadu_pd(a_im + o);
      const __m256d br = _mm256_loadu_pd(b_re + o);
      const __m256d bi = _mm256_loadu_pd(b_im + o);
      acc_re = _mm256_fmadd_pd(ar, br, acc_re);
      acc_re = _mm256_fmadd_pd(ai, bi, acc_re);
      acc_im = _mm256_fmadd_pd(ar, bi, acc_im);
      acc_im = _mm256_fnmadd_pd(ai, br, acc_im);
    }
    _mm256_storeu_pd(out + k, _mm256_fmadd_pd(acc_re, acc_re, _mm256_mul_pd(acc_im, acc_im)));
  }
  for (std::size_t k = vec_end; k < count; ++k) {
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

void sinr_avx2(const double* sig, const double* intf, std::size_t count, double p_sig, double n0, double p_int,
               double* out) {
  const std::size_t vec_end = count & ~std::size_t{3};
  const __m256d ps = _mm256_set1_pd(p_sig);
  const __m256d pn = _mm256_set1_pd(n0);
  const __m256d pi = _mm256_set1_pd(p_int);
  for (std::size_t k = 0; k < vec_end; k += 4) {
    const __m256d num = _mm256_mul_pd(ps, _mm256_loadu_pd(sig + k));
    const __m256d den = _mm256_fmadd_pd(pi, _mm256_loadu_pd(intf + k), pn);
    _mm256_storeu_pd(out + k, _mm256_div_pd(num, den));
  }
  for (std::size_t k = vec_end; k < count; ++k) out[k] = p_sig * sig[k] / (n0 + p_int * intf[k]);
}

const KernelTable kAvx2{Isa::kAvx2, "avx2", mix_avx2, norm2_avx2, proj_abs2_avx2, pair_abs2_avx2, sinr_avx2};

}  // namespace

const KernelTable* avx2_table_if_compiled() { return &kAvx2; }

}  // namespace lsa::simd

#endif  // LSA_HAVE_AVX2
