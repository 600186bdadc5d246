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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dwqst {

using cplx = std::complex<double>;
using Bits = std::vector<std::uint8_t>;

/// Basis-index convention: site 1 is the most significant bit.
std::uint64_t bits_to_index(std::span<const std::uint8_t> bits);
Bits index_to_bits(std::uint64_t index, int n_bits);

/// Parses "0110" into {0,1,1,0}. Throws std::invalid_argument on other characters.
Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

/// Normalized amplitude vector over the 2^n computational basis.
///
/// Immutable after construction. The constructor normalizes its input, so a
/// StateVector always has unit norm up to rounding.
class StateVector {
public:
    /// Single spin in |0>.
    StateVector();
    /// Throws std::invalid_argument if the length is not 2^n_spins or the norm is zero.
    StateVector(int n_spins, std::vector<cplx> amplitudes);

    static StateVector basis(int n_spins, std::uint64_t index);
    static StateVector from_bits(std::span<const std::uint8_t> bits);
    static StateVector from_bits(std::string_view bits);

    int n_spins() const { return n_spins_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

private:
    int n_spins_;
    std::vector<cplx> amplitudes_;
};

/// <a|b>. Throws std::invalid_argument on dimension mismatch.
cplx overlap(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// <psi|Z_site|psi> with Z|0> = +|0>. Sites are 1-based.
double sigma_z_expectation(const StateVector& state, int site);

/// Reduced density matrix of `count` consecutive sites starting at `first_site`.
/// Row/column index uses the same MSB-first convention restricted to the block.
Eigen::MatrixXcd reduced_density_matrix(const StateVector& state, int first_site, int count);

}  // namespace dwqst
