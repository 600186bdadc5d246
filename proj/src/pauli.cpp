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

#include "dwqst/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace dwqst {

PauliSum::PauliSum(int n_spins) : n_spins_(n_spins) {
    if (n_spins < 1 || n_spins > 30) {
        throw std::invalid_argument("PauliSum: n_spins must be in [1, 30]");
    }
}

PauliSum& PauliSum::add(double coeff, std::map<int, Pauli> factors) {
    for (const auto& [site, op] : factors) {
        (void)op;
        if (site < 1 || site > n_spins_) {
            throw std::out_of_range("PauliSum: site " + std::to_string(site) + " outside [1, " +
                                    std::to_string(n_spins_) + "]");
        }
    }
    if (!std::isfinite(coeff)) throw std::invalid_argument("PauliSum: non-finite coefficient");
    terms_.push_back({coeff, std::move(factors)});
    return *this;
}

std::string PauliSum::to_string() const {
    std::string out;
    char buf[64];
    for (const auto& term : terms_) {
        std::snprintf(buf, sizeof buf, "%+.17g", term.coeff);
        if (!out.empty()) out += ' ';
        out += buf;
        for (const auto& [site, op] : term.factors) {
            out += ' ';
            out += "XYZ"[static_cast<int>(op)];
            out += std::to_string(site);
        }
    }
    return out.empty() ? "0" : out;
}

Operator::Operator(int n_spins, std::vector<std::uint32_t> row_ptr, std::vector<std::uint32_t> col_idx,
                   std::vector<cplx> values)
    : n_spins_(n_spins),
      dim_(std::size_t{1} << n_spins),
      row_ptr_(std::move(row_ptr)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
    if (row_ptr_.size() != dim_ + 1 || col_idx_.size() != values_.size() || row_ptr_.back() != values_.size()) {
        throw std::invalid_argument("Operator: inconsistent CSR arrays");
    }
}

simd::CsrView Operator::view() const {
    return {dim_, row_ptr_, col_idx_, values_};
}

void Operator::apply(const cplx* x, cplx* y) const { apply(x, y, simd::active()); }

void Operator::apply(const cplx* x, cplx* y, const simd::KernelTable& k) const {
    k.spmv(view(), x, y);
}

Eigen::MatrixXcd Operator::to_dense() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col_idx_[k])) = values_[k];
        }
    }
    return m;
}

std::vector<double> Operator::diagonal() const {
    std::vector<double> d(dim_, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            if (col_idx_[k] == r) d[r] = values_[k].real();
        }
    }
    return d;
}

double Operator::hermiticity_defect() const {
    // Look up each (c, r) partner by binary search in row c.
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            const std::uint32_t c = col_idx_[k];
            const auto first = col_idx_.begin() + row_ptr_[c];
            const auto last = col_idx_.begin() + row_ptr_[c + 1];
            const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(r));
            cplx partner{};
            if (it != last && *it == r) partner = values_[static_cast<std::size_t>(it - col_idx_.begin())];
            worst = std::max(worst, std::abs(values_[k] - std::conj(partner)));
        }
    }
    return worst;
}

bool Operator::is_real() const {
    return std::all_of(values_.begin(), values_.end(), [](cplx v) { return v.imag() == 0.0; });
}

double Operator::norm_bound() const {
    double best = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        double s = 0.0;
        for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) s += std::abs(values_[k]);
        best = std::max(best, s);
    }
    return best;
}

namespace {

std::uint32_t reverse_bits(std::uint32_t v, int n) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i) {
        out = (out << 1) | (v & 1U);
        v >>= 1;
    }
    return out;
}

// Row-wise builder: collects (col, value) pairs, sorts and merges them.
Operator build_csr(int n_spins, const std::vector<std::vector<std::pair<std::uint32_t, cplx>>>& rows) {
    std::vector<std::uint32_t> row_ptr{0};
    std::vector<std::uint32_t> col_idx;
    std::vector<cplx> values;
    row_ptr.reserve(rows.size() + 1);
    for (auto row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < row.size();) {
            std::uint32_t c = row[i].first;
            cplx v{};
            for (; i < row.size() && row[i].first == c; ++i) v += row[i].second;
            if (v != cplx{}) {
                col_idx.push_back(c);
                values.push_back(v);
            }
        }
        row_ptr.push_back(static_cast<std::uint32_t>(values.size()));
    }
    return Operator(n_spins, std::move(row_ptr), std::move(col_idx), std::move(values));
}

}  // namespace

Operator Operator::reflected() const {
    std::vector<std::vector<std::pair<std::uint32_t, cplx>>> rows(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        const std::uint32_t rr = reverse_bits(static_cast<std::uint32_t>(r), n_spins_);
        for (std::uint32_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            rows[rr].emplace_back(reverse_bits(col_idx_[k], n_spins_), values_[k]);
        }
    }
    return build_csr(n_spins_, rows);
}

Operator realize(const PauliSum& p) {
    const int n = p.n_spins();
    if (n > 26) throw std::invalid_argument("realize: chains above 26 spins are not supported");
    const std::size_t dim = std::size_t{1} << n;

    // P = i^{#Y} X^{flip} Z^{zmask}, since Y = i X Z on each site.
    struct Diag {
        std::uint32_t zmask;
        cplx weight;
    };
    std::map<std::uint32_t, std::vector<Diag>> groups;
    for (const auto& term : p.terms()) {
        std::uint32_t flip = 0;
        std::uint32_t zmask = 0;
        int n_y = 0;
        for (const auto& [site, op] : term.factors) {
            const std::uint32_t bit = std::uint32_t{1} << (n - site);
            if (op == Pauli::X || op == Pauli::Y) flip |= bit;
            if (op == Pauli::Z || op == Pauli::Y) zmask |= bit;
            if (op == Pauli::Y) ++n_y;
        }
        static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        groups[flip].push_back({zmask, term.coeff * kIPow[n_y % 4]});
    }

    std::vector<std::vector<std::pair<std::uint32_t, cplx>>> rows(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        rows[r].reserve(groups.size());
        for (const auto& [flip, diags] : groups) {
            const std::uint32_t col = static_cast<std::uint32_t>(r) ^ flip;
            cplx v{};
            for (const auto& d : diags) {
                v += (std::popcount(col & d.zmask) & 1) ? -d.weight : d.weight;
            }
            rows[r].emplace_back(col, v);
        }
    }
    return build_csr(n, rows);
}

double commutator_max_norm(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("commutator_max_norm: dimension mismatch");
    const Eigen::MatrixXcd da = a.to_dense();
    const Eigen::MatrixXcd db = b.to_dense();
    const Eigen::MatrixXcd c = da * db - db * da;
    return c.cwiseAbs().maxCoeff();
}

Operator total_z(int n_spins) {
    PauliSum z(n_spins);
    for (int s = 1; s <= n_spins; ++s) z.add(1.0, {{s, Pauli::Z}});
    return realize(z);
}

}  // namespace dwqst
