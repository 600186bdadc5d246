// Copyright 2026 The dwqst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA variants. This file is compiled with -mavx2 -mfma and must only
// be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include "simd_variants.hpp"

namespace dwqst::simd {
namespace {

// Two complex numbers per 256-bit register: [re0, im0, re1, im1].

inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d a_re = _mm256_movedup_pd(a);
    const __m256d a_im = _mm256_permute_pd(a, 0xF);
    const __m256d b_swap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

inline __m128d cmul1(__m128d a, __m128d b) {
    const __m128d a_re = _mm_movedup_pd(a);
    const __m128d a_im = _mm_permute_pd(a, 0x3);
    const __m128d b_swap = _mm_permute_pd(b, 0x1);
    return _mm_addsub_pd(_mm_mul_pd(a_re, b), _mm_mul_pd(a_im, b_swap));
}

inline __m128d hsum_pairs(__m256d v) {
    return _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
}

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

void spmv_avx2(const CsrView& a, const cplx* x, cplx* y) {
    const double* xd = as_doubles(x);
    const double* vd = as_doubles(a.values.data());
    const std::uint32_t* cols = a.col_idx.data();
    for (std::size_t r = 0; r < a.rows; ++r) {
        std::uint32_t k = a.row_ptr[r];
        const std::uint32_t end = a.row_ptr[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; k + 2 <= end; k += 2) {
            const __m256d av = _mm256_loadu_pd(vd + 2 * k);
            const __m128d x0 = _mm_loadu_pd(xd + 2 * std::size_t{cols[k]});
            const __m128d x1 = _mm_loadu_pd(xd + 2 * std::size_t{cols[k + 1]});
            acc = _mm256_add_pd(acc, cmul2(av, _mm256_set_m128d(x1, x0)));
        }
        __m128d sum = hsum_pairs(acc);
        if (k < end) {
            const __m128d av = _mm_loadu_pd(vd + 2 * k);
            const __m128d xv = _mm_loadu_pd(xd + 2 * std::size_t{cols[k]});
            sum = _mm_add_pd(sum, cmul1(av, xv));
        }
        _mm_storeu_pd(as_doubles(y + r), sum);
    }
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const double* xd = as_doubles(x);
    double* yd = as_doubles(y);
    const __m256d a_re = _mm256_set1_pd(alpha.real());
    const __m256d a_im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d x_swap = _mm256_permute_pd(xv, 0x5);
        const __m256d prod = _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, x_swap));
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
    }
    for (; i < n; ++i) {
        y[i] += cplx{alpha.real() * x[i].real() - alpha.imag() * x[i].imag(),
                     alpha.real() * x[i].imag() + alpha.imag() * x[i].real()};
    }
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    // conj(x) y = (xr yr + xi yi) + i (xr yi - xi yr)
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc_im);
    }
    alignas(32) double re[4];
    alignas(32) double im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    double out_re = (re[0] + re[1]) + (re[2] + re[3]);
    double out_im = (im[0] - im[1]) + (im[2] - im[3]);
    for (; i < n; ++i) {
        out_re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        out_im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {out_re, out_im};
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
    const double* xd = as_doubles(x);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(xd + 2 * i);
        const __m256d b = _mm256_loadu_pd(xd + 2 * i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    alignas(32) double buf[4];
    _mm256_store_pd(buf, _mm256_add_pd(acc0, acc1));
    double out = (buf[0] + buf[1]) + (buf[2] + buf[3]);
    for (; i < n; ++i) out += std::norm(x[i]);
    return out;
}

void scale_avx2(std::size_t n, cplx alpha, cplx* x) {
    double* xd = as_doubles(x);
    const __m256d a_re = _mm256_set1_pd(alpha.real());
    const __m256d a_im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d x_swap = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, x_swap)));
    }
    for (; i < n; ++i) {
        x[i] = cplx{alpha.real() * x[i].real() - alpha.imag() * x[i].imag(),
                    alpha.real() * x[i].imag() + alpha.imag() * x[i].real()};
    }
}

void cmul_avx2(std::size_t n, const cplx* d, cplx* x) {
    const double* dd = as_doubles(d);
    double* xd = as_doubles(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d dv = _mm256_loadu_pd(dd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul2(dv, _mm256_loadu_pd(xd + 2 * i)));
    }
    if (i < n) {
        _mm_storeu_pd(xd + 2 * i, cmul1(_mm_loadu_pd(dd + 2 * i), _mm_loadu_pd(xd + 2 * i)));
    }
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        Isa::Avx2, spmv_avx2, axpy_avx2, dotc_avx2,
        norm_sq_avx2, scale_avx2, cmul_avx2,
    };
    return table;
}

}  // namespace dwqst::simd
