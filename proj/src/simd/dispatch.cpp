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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "simd_variants.hpp"

namespace dwqst::simd {
namespace {

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(DWQST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(DWQST_HAVE_NEON)
            return true;  // mandatory on AArch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    switch (isa) {
#if defined(DWQST_HAVE_AVX2)
        case Isa::Avx2:
            return avx2_kernels();
#endif
#if defined(DWQST_HAVE_NEON)
        case Isa::Neon:
            return neon_kernels();
#endif
        default:
            return scalar_kernels();
    }
}

const KernelTable& resolve() {
    if (const char* forced = std::getenv("DWQST_SIMD"); forced != nullptr && *forced != '\0') {
        const std::string name(forced);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (name == isa_name(isa)) return kernels_for(isa);
        }
        throw std::invalid_argument("DWQST_SIMD: unknown kernel variant '" + name + "'");
    }
    const auto isas = available();
    return table_for(isas.back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (cpu_supports(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& kernels_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                                    "' is not available on this build/CPU");
    }
    return table_for(isa);
}

const KernelTable& active() {
    static const KernelTable& chosen = resolve();
    return chosen;
}

}  // namespace dwqst::simd
