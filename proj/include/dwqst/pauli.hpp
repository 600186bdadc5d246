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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dwqst/simd/kernels.hpp"
#include "dwqst/state.hpp"

namespace dwqst {

enum class Pauli : std::uint8_t { X, Y, Z };

struct PauliTerm {
    double coeff = 0.0;
    std::map<int, Pauli> factors;  // 1-based site -> Pauli

    bool operator==(const PauliTerm&) const = default;
};

/// Real-weighted sum of Pauli strings on a fixed number of spins.
class PauliSum {
public:
    explicit PauliSum(int n_spins);

    /// Throws std::out_of_range if any site is outside [1, n_spins].
    PauliSum& add(double coeff, std::map<int, Pauli> factors);

    int n_spins() const { return n_spins_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    /// e.g. "+0.5 X1 X2 -1 Z3"
    std::string to_string() const;

private:
    int n_spins_;
    std::vector<PauliTerm> terms_;
};

/// Sparse Hermitian matrix in CSR layout. Immutable after construction.
class Operator {
public:
    Operator() = default;
    Operator(int n_spins, std::vector<std::uint32_t> row_ptr, std::vector<std::uint32_t> col_idx,
             std::vector<cplx> values);

    int n_spins() const { return n_spins_; }
    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return values_.size(); }

    simd::CsrView view() const;

    /// y = H x. `x` and `y` must not alias.
    void apply(const cplx* x, cplx* y) const;
    void apply(const cplx* x, cplx* y, const simd::KernelTable& k) const;

    Eigen::MatrixXcd to_dense() const;
    std::vector<double> diagonal() const;  // real part of the diagonal

    /// max |A - A^dagger| over entries.
    double hermiticity_defect() const;
    bool is_real() const;
    /// Max absolute row sum, an upper bound on the spectral radius.
    double norm_bound() const;

    /// Site-reversed copy: site s -> n+1-s.
    Operator reflected() const;

private:
    int n_spins_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::uint32_t> row_ptr_;
    std::vector<std::uint32_t> col_idx_;
    std::vector<cplx> values_;
};

/// Sum of coeff * (tensor product of Pauli matrices) with Z|0> = +|0>.
Operator realize(const PauliSum& p);

/// max-norm of AB - BA, computed densely. Meant for small chains.
double commutator_max_norm(const Operator& a, const Operator& b);

/// Realization of sum_n Z_n on n spins.
Operator total_z(int n_spins);

}  // namespace dwqst
