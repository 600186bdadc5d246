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

#include "dwqst/simd/kernels.hpp"

namespace dwqst::simd {
namespace {

// Plain complex product; std::complex operator* adds NaN/inf recovery we do not need.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

void spmv_scalar(const CsrView& a, const cplx* x, cplx* y) {
    for (std::size_t r = 0; r < a.rows; ++r) {
        cplx acc{0.0, 0.0};
        for (std::uint32_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
            acc += mul(a.values[k], x[a.col_idx[k]]);
        }
        y[r] = acc;
    }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += mul(alpha, x[i]);
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += mul(std::conj(x[i]), y[i]);
    return acc;
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(x[i]);
    return acc;
}

void scale_scalar(std::size_t n, cplx alpha, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = mul(alpha, x[i]);
}

void cmul_scalar(std::size_t n, const cplx* d, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] = mul(d[i], x[i]);
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        Isa::Scalar, spmv_scalar, axpy_scalar, dotc_scalar,
        norm_sq_scalar, scale_scalar, cmul_scalar,
    };
    return table;
}

}  // namespace dwqst::simd
