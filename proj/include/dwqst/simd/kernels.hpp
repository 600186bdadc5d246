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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Complex double-precision vector kernels used by the propagators.
//
// Every kernel has a scalar reference implementation. Vectorized variants
// (AVX2+FMA on x86-64, NEON on AArch64) are compiled into separate
// translation units and picked at runtime by `active()`. The variants are
// allowed to reorder floating-point sums, so results agree with the scalar
// path only up to rounding.
//
// The environment variable DWQST_SIMD=scalar|avx2|neon forces a variant.

namespace dwqst::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Read-only view of a CSR matrix with complex values.
struct CsrView {
    std::size_t rows = 0;
    std::span<const std::uint32_t> row_ptr;  // rows + 1 entries
    std::span<const std::uint32_t> col_idx;
    std::span<const cplx> values;
};

struct KernelTable {
    Isa isa;

    // y = A x
    void (*spmv)(const CsrView& a, const cplx* x, cplx* y);
    // y += alpha x
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
    // sum_i conj(x_i) y_i
    cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
    // sum_i |x_i|^2
    double (*norm_sq)(std::size_t n, const cplx* x);
    // x *= alpha
    void (*scale)(std::size_t n, cplx alpha, cplx* x);
    // x_i *= d_i
    void (*cmul)(std::size_t n, const cplx* d, cplx* x);
};

const KernelTable& scalar_kernels();

/// Variants compiled into this build and supported by the running CPU.
std::vector<Isa> available();

/// Throws std::invalid_argument if `isa` is not available.
const KernelTable& kernels_for(Isa isa);

/// Best available variant, or the one named by DWQST_SIMD. Resolved once.
const KernelTable& active();

}  // namespace dwqst::simd
