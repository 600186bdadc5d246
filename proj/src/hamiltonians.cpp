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

#include "dwqst/hamiltonians.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dwqst {

double CouplingProfile::at(int n) const {
    if (n == N) return 0.0;
    if (n < 1 || n > N) throw std::out_of_range("coupling index outside [1, N]");
    return t[static_cast<std::size_t>(n - 1)];
}

CouplingProfile coupling_profile(int N, double lambda) {
    if (N < 2) throw std::invalid_argument("coupling_profile: N must be >= 2");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("coupling_profile: lambda must be > 0");
    }
    CouplingProfile p{N, lambda, std::vector<double>(static_cast<std::size_t>(N - 1))};
    for (int n = 1; n <= N / 2; ++n) {
        const double v = 0.5 * lambda * std::sqrt(static_cast<double>(n) * static_cast<double>(N - n));
        p.t[static_cast<std::size_t>(n - 1)] = v;
        p.t[static_cast<std::size_t>(N - n - 1)] = v;
    }
    return p;
}

void RegisterLayout::validate() const {
    if (n_alice < 1) throw std::invalid_argument("layout.n_alice must be >= 1");
    if (n_wire < 0) throw std::invalid_argument("layout.n_wire must be >= 0");
    if (n_bob != n_alice) throw std::invalid_argument("layout.n_bob must equal layout.n_alice");
}

ChainSpec ChainSpec::single(int N, double J, double lambda) {
    ChainSpec s;
    s.N = N;
    s.J = J;
    s.lambda = lambda;
    s.layout = {1, N - 2, 1};
    return s;
}

ChainSpec ChainSpec::multi(RegisterLayout layout, double J, double lambda) {
    ChainSpec s;
    s.N = layout.total();
    s.J = J;
    s.lambda = lambda;
    s.layout = layout;
    return s;
}

std::vector<std::string> ChainSpec::validate() const {
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be > 0");
    if (!std::isfinite(J)) throw std::invalid_argument("J must be finite");
    if (std::abs(J) < lambda) throw std::invalid_argument("|J| must be >= lambda");
    layout.validate();
    if (layout.total() != N) {
        throw std::invalid_argument("layout (" + std::to_string(layout.n_alice) + ", " +
                                    std::to_string(layout.n_wire) + ", " + std::to_string(layout.n_bob) +
                                    ") does not add up to N = " + std::to_string(N));
    }
    std::vector<std::string> warnings;
    if (std::abs(J) / lambda < 8.0) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "|J|/lambda = %.4g is below 8; the quadratic error law does not hold",
                      std::abs(J) / lambda);
        warnings.emplace_back(buf);
    }
    return warnings;
}

PauliSum heisenberg_xy(int N, double lambda) {
    const auto prof = coupling_profile(N, lambda);
    PauliSum h(N);
    for (int n = 1; n < N; ++n) {
        const double c = 0.5 * prof.at(n);
        h.add(c, {{n, Pauli::X}, {n + 1, Pauli::X}});
        h.add(c, {{n, Pauli::Y}, {n + 1, Pauli::Y}});
    }
    return h;
}

cplx transfer_amplitude_closed_form(int N, double lambda, double t) {
    if (N < 2) throw std::invalid_argument("transfer_amplitude_closed_form: N must be >= 2");
    const cplx base{0.0, -std::sin(0.5 * lambda * t)};
    cplx out{1.0, 0.0};
    for (int i = 0; i < N - 1; ++i) out *= base;
    return out;
}

namespace {

double boundary_sign(VirtualSpin v) {
    switch (v) {
        case VirtualSpin::Down: return 1.0;
        case VirtualSpin::Up: return -1.0;
        case VirtualSpin::None: return 0.0;
    }
    return 0.0;
}

}  // namespace

PauliSum ising_chain(int N, double J, const std::vector<double>& x_fields, VirtualSpin left, VirtualSpin right,
                     bool emit_zero_fields) {
    if (x_fields.size() != static_cast<std::size_t>(N)) {
        throw std::invalid_argument("ising_chain: expected one transverse field per site");
    }
    PauliSum h(N);
    for (int n = 1; n <= N; ++n) {
        const double f = x_fields[static_cast<std::size_t>(n - 1)];
        if (f != 0.0 || emit_zero_fields) h.add(f, {{n, Pauli::X}});
    }
    if (left != VirtualSpin::None) h.add(boundary_sign(left) * J, {{1, Pauli::Z}});
    if (right != VirtualSpin::None) h.add(boundary_sign(right) * J, {{N, Pauli::Z}});
    for (int n = 1; n < N; ++n) h.add(J, {{n, Pauli::Z}, {n + 1, Pauli::Z}});
    return h;
}

PauliSum ising_dw(const ChainSpec& spec) {
    const auto prof = coupling_profile(spec.N, spec.lambda);
    std::vector<double> x(static_cast<std::size_t>(spec.N));
    for (int n = 1; n <= spec.N; ++n) x[static_cast<std::size_t>(n - 1)] = prof.at(n);
    return ising_chain(spec.N, spec.J, x, spec.boundary.left, spec.boundary.right, true);
}

PauliSum transport_hamiltonian(const ChainSpec& spec) {
    const auto prof = coupling_profile(spec.N, spec.lambda);
    std::vector<double> x(static_cast<std::size_t>(spec.N), 0.0);
    for (int n = 2; n <= spec.N; ++n) x[static_cast<std::size_t>(n - 1)] = prof.at(n - 1);
    return ising_chain(spec.N, spec.J, x, VirtualSpin::None, VirtualSpin::Down);
}

PauliSum reset_hamiltonian(const ChainSpec& spec) {
    const auto prof = coupling_profile(spec.N, spec.lambda);
    std::vector<double> x(static_cast<std::size_t>(spec.N), 0.0);
    for (int n = 1; n < spec.N; ++n) x[static_cast<std::size_t>(n - 1)] = prof.at(n);
    return ising_chain(spec.N, spec.J, x, VirtualSpin::Down, VirtualSpin::None);
}

PauliSum multiqubit_reset_hamiltonian(const ChainSpec& spec) {
    spec.layout.validate();
    if (spec.layout.total() != spec.N) {
        throw std::invalid_argument("multiqubit_reset_hamiltonian: layout does not add up to N");
    }
    const int active = spec.layout.active();
    const auto prof = spec.reset_profile == ResetProfile::ActiveMirror ? coupling_profile(active + 1, spec.lambda)
                                                                       : coupling_profile(spec.N, spec.lambda);
    std::vector<double> x(static_cast<std::size_t>(spec.N), 0.0);
    for (int n = 1; n <= active; ++n) x[static_cast<std::size_t>(n - 1)] = prof.at(n);
    return ising_chain(spec.N, spec.J, x, VirtualSpin::Down, VirtualSpin::None);
}

double energy_offset(int N, int M, double J) {
    if (M < 0 || M > N) throw std::out_of_range("energy_offset: M outside [0, N]");
    return J * static_cast<double>(N - 2 * M);
}

}  // namespace dwqst
