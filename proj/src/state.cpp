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

#include "dwqst/state.hpp"

#include <cmath>
#include <stdexcept>

#include "dwqst/simd/kernels.hpp"

namespace dwqst {

namespace {

constexpr int kMaxSpins = 30;

void check_spins(int n_spins) {
    if (n_spins < 1 || n_spins > kMaxSpins) {
        throw std::invalid_argument("n_spins must be in [1, 30], got " + std::to_string(n_spins));
    }
}

}  // namespace

std::uint64_t bits_to_index(std::span<const std::uint8_t> bits) {
    std::uint64_t index = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
        index = (index << 1) | b;
    }
    return index;
}

Bits index_to_bits(std::uint64_t index, int n_bits) {
    Bits out(static_cast<std::size_t>(n_bits));
    for (int i = 0; i < n_bits; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((index >> (n_bits - 1 - i)) & 1U);
    }
    return out;
}

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(static_cast<char>('0' + b));
    return out;
}

StateVector::StateVector() : n_spins_(1), amplitudes_{cplx{1.0, 0.0}, cplx{}} {}

StateVector::StateVector(int n_spins, std::vector<cplx> amplitudes)
    : n_spins_(n_spins), amplitudes_(std::move(amplitudes)) {
    check_spins(n_spins);
    if (amplitudes_.size() != (std::size_t{1} << n_spins)) {
        throw std::invalid_argument("amplitude vector length " + std::to_string(amplitudes_.size()) +
                                    " does not match 2^" + std::to_string(n_spins));
    }
    const auto& k = simd::active();
    const double nsq = k.norm_sq(amplitudes_.size(), amplitudes_.data());
    if (!(nsq > 0.0) || !std::isfinite(nsq)) {
        throw std::invalid_argument("state has zero or non-finite norm");
    }
    if (nsq != 1.0) k.scale(amplitudes_.size(), cplx{1.0 / std::sqrt(nsq), 0.0}, amplitudes_.data());
}

StateVector StateVector::basis(int n_spins, std::uint64_t index) {
    check_spins(n_spins);
    const std::size_t dim = std::size_t{1} << n_spins;
    if (index >= dim) throw std::invalid_argument("basis index out of range");
    std::vector<cplx> amps(dim);
    amps[index] = 1.0;
    return StateVector(n_spins, std::move(amps));
}

StateVector StateVector::from_bits(std::span<const std::uint8_t> bits) {
    return basis(static_cast<int>(bits.size()), bits_to_index(bits));
}

StateVector StateVector::from_bits(std::string_view bits) {
    const Bits parsed = parse_bits(bits);
    return from_bits(std::span<const std::uint8_t>(parsed));
}

double StateVector::norm() const {
    return std::sqrt(simd::active().norm_sq(amplitudes_.size(), amplitudes_.data()));
}

cplx overlap(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    return simd::active().dotc(a.dim(), a.amplitudes().data(), b.amplitudes().data());
}

double fidelity(const StateVector& a, const StateVector& b) {
    const double f = std::norm(overlap(a, b));
    return f > 1.0 ? 1.0 : f;
}

double sigma_z_expectation(const StateVector& state, int site) {
    const int n = state.n_spins();
    if (site < 1 || site > n) {
        throw std::out_of_range("site " + std::to_string(site) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t mask = std::uint64_t{1} << (n - site);
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        acc += (i & mask) ? -p : p;
    }
    return acc;
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& state, int first_site, int count) {
    const int n = state.n_spins();
    if (count < 1 || first_site < 1 || first_site + count - 1 > n) {
        throw std::out_of_range("reduced_density_matrix: block out of range");
    }
    const int shift = n - (first_site + count - 1);  // bits to the right of the block
    const std::uint64_t block_dim = std::uint64_t{1} << count;
    const std::uint64_t right_dim = std::uint64_t{1} << shift;
    const std::uint64_t left_dim = std::uint64_t{1} << (first_site - 1);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(block_dim),
                                                  static_cast<Eigen::Index>(block_dim));
    const auto amps = state.amplitudes();
    for (std::uint64_t l = 0; l < left_dim; ++l) {
        for (std::uint64_t r = 0; r < right_dim; ++r) {
            const std::uint64_t base = (l << (count + shift)) | r;
            for (std::uint64_t b = 0; b < block_dim; ++b) {
                const cplx ab = amps[base | (b << shift)];
                if (ab == cplx{}) continue;
                for (std::uint64_t c = 0; c < block_dim; ++c) {
                    rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c)) +=
                        ab * std::conj(amps[base | (c << shift)]);
                }
            }
        }
    }
    return rho;
}

}  // namespace dwqst
