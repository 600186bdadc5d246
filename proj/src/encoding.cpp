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

#include "dwqst/encoding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "dwqst/hamiltonians.hpp"
#include "dwqst/simd/kernels.hpp"

namespace dwqst {

namespace {

void check_bits(std::span<const std::uint8_t> bits, const char* what) {
    if (bits.empty()) throw std::invalid_argument(std::string(what) + ": empty bit string");
    for (auto b : bits) {
        if (b > 1) throw std::invalid_argument(std::string(what) + ": bit values must be 0 or 1");
    }
}

}  // namespace

Bits dw_encode_bits(std::span<const std::uint8_t> logical, BoundaryContext ctx, Anchor anchor) {
    check_bits(logical, "dw_encode_bits");
    const std::size_t k = logical.size();
    Bits out(k);
    if (anchor == Anchor::Wire) {
        std::uint8_t next = ctx.right_context & 1U;
        for (std::size_t j = k; j-- > 0;) {
            out[j] = logical[j] ^ next;
            next = out[j];
        }
    } else {
        std::uint8_t prev = ctx.left_value & 1U;
        for (std::size_t j = 0; j < k; ++j) {
            out[j] = logical[j] ^ prev;
            prev = out[j];
        }
    }
    return out;
}

Bits dw_read(std::span<const std::uint8_t> physical, BoundaryContext ctx, Anchor anchor) {
    check_bits(physical, "dw_read");
    const std::size_t k = physical.size();
    Bits out(k);
    if (anchor == Anchor::Wire) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint8_t right = j + 1 < k ? physical[j + 1] : (ctx.right_context & 1U);
            out[j] = physical[j] ^ right;
        }
    } else {
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint8_t left = j > 0 ? physical[j - 1] : (ctx.left_value & 1U);
            out[j] = physical[j] ^ left;
        }
    }
    return out;
}

StateVector dw_encode_state(const LogicalState& logical, BoundaryContext ctx, Anchor anchor) {
    const int k = logical.n_spins();
    std::vector<cplx> amps(logical.dim());
    for (std::uint64_t i = 0; i < logical.dim(); ++i) {
        const cplx a = logical[i];
        if (a == cplx{}) continue;
        const Bits phys = dw_encode_bits(index_to_bits(i, k), ctx, anchor);
        amps[bits_to_index(phys)] = a;
    }
    return StateVector(k, std::move(amps));
}

LogicalState dw_decode(const StateVector& physical, std::uint8_t reference) {
    const int k = physical.n_spins();
    const BoundaryContext ctx{0, static_cast<std::uint8_t>(reference & 1U)};
    std::vector<cplx> amps(physical.dim());
    for (std::uint64_t i = 0; i < physical.dim(); ++i) {
        const cplx a = physical[i];
        if (a == cplx{}) continue;
        amps[bits_to_index(dw_read(index_to_bits(i, k), ctx, Anchor::Wire))] = a;
    }
    return LogicalState(k, std::move(amps));
}

int count_internal_walls(std::span<const std::uint8_t> bits) {
    int m = 0;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) m += bits[i] != bits[i + 1];
    return m;
}

int count_domain_walls(std::span<const std::uint8_t> bits, BoundaryContext ctx) {
    if (bits.empty()) return (ctx.left_value & 1U) != (ctx.right_context & 1U);
    return count_internal_walls(bits) + ((ctx.left_value & 1U) != bits.front()) +
           (bits.back() != (ctx.right_context & 1U));
}

StateVector offset_correction(const StateVector& state, double J, double tau) {
    const int n = state.n_spins();
    const std::size_t dim = state.dim();
    std::vector<cplx> phase(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        // sum Z_n Z_{n+1} = (N - 1) - 2 * (internal walls)
        const int walls = std::popcount(static_cast<std::uint64_t>((i ^ (i >> 1)) & ((std::uint64_t{1} << (n - 1)) - 1)));
        const double d = static_cast<double>(n - 1 - 2 * walls);
        phase[i] = std::polar(1.0, tau * J * d);
    }
    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    simd::active().cmul(dim, phase.data(), amps.data());
    return StateVector(n, std::move(amps));
}

PhaseLedger phase_ledger(int N, double J, double tau, int stages) {
    if (stages != 1 && stages != 2) throw std::invalid_argument("phase_ledger: stages must be 1 or 2");
    PhaseLedger out;
    const double s = static_cast<double>(stages);
    const double e0 = energy_offset(N, 0, J);
    out.global_phase = s * e0 * tau;
    for (int m = 0; m <= N; ++m) out.relative_phase[m] = s * (energy_offset(N, m, J) - e0) * tau;
    return out;
}

}  // namespace dwqst
