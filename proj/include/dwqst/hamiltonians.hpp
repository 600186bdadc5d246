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

#include <string>
#include <vector>

#include "dwqst/pauli.hpp"

// Hamiltonian builders for the Heisenberg baseline and the domain-wall
// protocol. All rates are angular frequencies (hbar = 1).
//
// A virtual spin is a fixed boundary spin realized as a local Z field on the
// end site: a Down (|0>) neighbour of site s contributes +J Z_s, an Up (|1>)
// neighbour contributes -J Z_s. It is never an extra Hilbert-space site.

namespace dwqst {

/// t_n = (lambda/2) sqrt(n (N - n)), n = 1..N-1.
struct CouplingProfile {
    int N = 0;
    double lambda = 0.0;
    std::vector<double> t;  // t[n-1] = t_n

    /// t_n for n in [1, N]; t_N evaluates the formula at n = N, which is 0.
    double at(int n) const;
};

/// Throws std::invalid_argument for N < 2 or lambda <= 0.
CouplingProfile coupling_profile(int N, double lambda);

enum class VirtualSpin { None, Down, Up };

struct BoundaryFields {
    VirtualSpin left = VirtualSpin::Up;
    VirtualSpin right = VirtualSpin::Down;
};

/// Alice register, wire, Bob register, left to right.
struct RegisterLayout {
    int n_alice = 1;
    int n_wire = 0;
    int n_bob = 1;

    int total() const { return n_alice + n_wire + n_bob; }
    int active() const { return n_alice + n_wire; }
    /// Throws std::invalid_argument.
    void validate() const;
    bool operator==(const RegisterLayout&) const = default;
};

/// How the stage-2 transverse profile is laid over sites 1..n_alice+n_wire.
enum class ResetProfile {
    ActiveMirror,  // coupling_profile(n_alice + n_wire + 1), mirror-symmetric over the active sites
    FullChain,     // first n_alice + n_wire entries of coupling_profile(N)
};

struct ChainSpec {
    int N = 2;
    double J = 0.0;
    double lambda = 1.0;
    RegisterLayout layout{1, 0, 1};
    BoundaryFields boundary{};
    ResetProfile reset_profile = ResetProfile::ActiveMirror;

    /// Single-qubit layout (1, N-2, 1).
    static ChainSpec single(int N, double J, double lambda);
    static ChainSpec multi(RegisterLayout layout, double J, double lambda);

    double ratio() const { return J / lambda; }

    /// Throws std::invalid_argument for hard violations (N < 2, |J| < lambda,
    /// layout not matching N). Returns warnings, e.g. for |J|/lambda < 8.
    std::vector<std::string> validate() const;
};

/// H_G = +sum_n (t_n/2)(X_n X_{n+1} + Y_n Y_{n+1}).
PauliSum heisenberg_xy(int N, double lambda);

/// [-i sin(lambda t / 2)]^{N-1}, the <0..01|e^{-i H_G t}|10..0> amplitude.
cplx transfer_amplitude_closed_form(int N, double lambda, double t);

/// sum_{n=1}^{N} t_n X_n + boundary fields + J sum Z_n Z_{n+1}, with the
/// boundary taken from spec.boundary (default: left Up, right Down).
PauliSum ising_dw(const ChainSpec& spec);

/// Stage 1: sum_{n=2}^{N} t_{n-1} X_n + J Z_N + J sum Z_n Z_{n+1}.
/// Spin 1 carries no field and no transverse term.
PauliSum transport_hamiltonian(const ChainSpec& spec);

/// Stage 2: sum_{n=1}^{N-1} t_n X_n + J Z_1 + J sum Z_n Z_{n+1}.
/// The left virtual spin is Down, so the wire relaxes to all |0>.
PauliSum reset_hamiltonian(const ChainSpec& spec);

/// Stage 2 for registers: X fields only on sites 1..n_alice+n_wire.
PauliSum multiqubit_reset_hamiltonian(const ChainSpec& spec);

/// Diagonal energy J(N - 2M) of an M-wall configuration.
/// Throws std::out_of_range unless 0 <= M <= N.
double energy_offset(int N, int M, double J);

/// General builder used by the named constructors above.
/// `x_fields[n-1]` multiplies X_n; zero entries are still emitted so that
/// term lists stay literal.
PauliSum ising_chain(int N, double J, const std::vector<double>& x_fields, VirtualSpin left,
                     VirtualSpin right, bool emit_zero_fields = false);

}  // namespace dwqst
