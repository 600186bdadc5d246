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

// AArch64 NEON variants. One complex<double> per float64x2_t.

#include <arm_neon.h>

#include "simd_variants.hpp"

namespace dwqst::simd {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

inline float64x2_t cmul1(float64x2_t a, float64x2_t b) {
    static const float64x2_t sign = {-1.0, 1.0};
    const float64x2_t t1 = vmulq_f64(vdupq_laneq_f64(a, 0), b);
    const float64x2_t t2 = vmulq_f64(vdupq_laneq_f64(a, 1), vextq_f64(b, b, 1));
    return vfmaq_f64(t1, t2, sign);
}

void spmv_neon(const CsrView& a, const cplx* x, cplx* y) {
    const double* xd = as_doubles(x);
    const double* vd = as_doubles(a.values.data());
    for (std::size_t r = 0; r < a.rows; ++r) {
        float64x2_t acc0 = vdupq_n_f64(0.0);
        float64x2_t acc1 = vdupq_n_f64(0.0);
        std::uint32_t k = a.row_ptr[r];
        const std::uint32_t end = a.row_ptr[r + 1];
        for (; k + 2 <= end; k += 2) {
            acc0 = vaddq_f64(acc0, cmul1(vld1q_f64(vd + 2 * k),
                                         vld1q_f64(xd + 2 * std::size_t{a.col_idx[k]})));
            acc1 = vaddq_f64(acc1, cmul1(vld1q_f64(vd + 2 * k + 2),
                                         vld1q_f64(xd + 2 * std::size_t{a.col_idx[k + 1]})));
        }
        if (k < end) {
            acc0 = vaddq_f64(acc0, cmul1(vld1q_f64(vd + 2 * k),
                                         vld1q_f64(xd + 2 * std::size_t{a.col_idx[k]})));
        }
        vst1q_f64(as_doubles(y + r), vaddq_f64(acc0, acc1));
    }
}

void axpy_neon(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const float64x2_t av = {alpha.real(), alpha.imag()};
    const double* xd = as_doubles(x);
    double* yd = as_doubles(y);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(yd + 2 * i, vaddq_f64(vld1q_f64(yd + 2 * i), cmul1(av, vld1q_f64(xd + 2 * i))));
    }
}

cplx dotc_neon(std::size_t n, const cplx* x, const cplx* y) {
    const double* xd = as_doubles(x);
    const double* yd = as_doubles(y);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        acc_re = vfmaq_f64(acc_re, xv, yv);
        acc_im = vfmaq_f64(acc_im, xv, vextq_f64(yv, yv, 1));
    }
    return {vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_re, 1),
            vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

double norm_sq_neon(std::size_t n, const cplx* x) {
    const double* xd = as_doubles(x);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(xd + 2 * i);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

void scale_neon(std::size_t n, cplx alpha, cplx* x) {
    const float64x2_t av = {alpha.real(), alpha.imag()};
    double* xd = as_doubles(x);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(xd + 2 * i, cmul1(av, vld1q_f64(xd + 2 * i)));
    }
}

void cmul_neon(std::size_t n, const cplx* d, cplx* x) {
    const double* dd = as_doubles(d);
    double* xd = as_doubles(x);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(xd + 2 * i, cmul1(vld1q_f64(dd + 2 * i), vld1q_f64(xd + 2 * i)));
    }
}

}  // namespace

const KernelTable& neon_kernels() {
    static const KernelTable table{
        Isa::Neon, spmv_neon, axpy_neon, dotc_neon,
        norm_sq_neon, scale_neon, cmul_neon,
    };
    return table;
}

}  // namespace dwqst::simd
