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

#include "dwqst/encoding.hpp"
#include "dwqst/hamiltonians.hpp"
#include "dwqst/propagator.hpp"

// Two-step domain-wall transfer and the Heisenberg baseline.
//
// Stage 1 (0 <= t <= tau) runs the transport Hamiltonian on the whole chain,
// stage 2 (tau < t <= 2 tau) the reset Hamiltonian on Alice's register and
// the wire. tau = pi / lambda. The switch is instantaneous.
//
// Targets. A logical basis string l of Alice ends up as the Bob bit pattern
// that decodes (reference 0) to reverse(l), with the rest of the chain in |0>.
// Each branch picks up
//   a transfer phase    (-i)^{(L-1)m} (-1)^{m(m-1)/2} per stage, for m walls
//                       mirrored over L positions (walls hop like free fermions)
//   a dynamic phase     exp(-i E_{M1} min(t, tau) - i E_{M2} max(t - tau, 0))
// The "uncorrected" targets keep only the transfer phase; the "corrected"
// ones include the dynamic phase as well, i.e. they undo the energy offsets.

namespace dwqst {

struct ProtocolConfig {
    ChainSpec spec;
    PropagatorConfig propagator;
    int n_time_samples = 200;  // per stage
    bool apply_phase_correction = true;
    double peak_window = 0.05;  // relative half-width around 2 tau
    int peak_samples = 101;
    /// If nonzero, spin 1 keeps a transverse term t_1 X_1 during stage 1 and is
    /// held in place by an extra pin_field * Z_1 instead.
    double pin_field = 0.0;

    /// Throws std::invalid_argument; returns ChainSpec warnings.
    std::vector<std::string> validate() const;
};

struct PeakInfo {
    double time = 0.0;
    double logical_fidelity = 0.0;
    double chain_fidelity = 0.0;
};

/// Bookkeeping for one logical basis branch of the input.
struct BranchPhase {
    std::string logical;   // Alice's logical string
    std::string initial;   // physical chain at t = 0
    std::string target;    // physical chain expected at readout
    int walls_stage1 = 0;  // M1
    int walls_stage2 = 0;  // M2
    double transfer_phase = 0.0;  // arg of the transfer phase
    double dynamic_phase = 0.0;   // E_{M1} tau + E_{M2} tau
};

struct ProtocolResult {
    double tau = 0.0;
    double readout_time = 0.0;
    std::vector<double> times;
    std::vector<double> chain_corrected;
    std::vector<double> chain_uncorrected;
    std::vector<double> logical_corrected;
    std::vector<double> logical_uncorrected;
    std::vector<std::vector<double>> sigma_z;  // [site - 1][time index]
    LogicalState input;
    LogicalState final_logical;  // Bob's register given the rest reads |0>, decoded
    double final_fidelity = 0.0;  // Bob's logical fidelity at readout
    double chain_fidelity = 0.0;  // full-chain fidelity at readout
    PeakInfo peak;
    PhaseLedger phases;
    std::vector<BranchPhase> branches;
    StateVector final_state;  // uncorrected chain state at readout
    std::vector<std::string> warnings;
};

/// Standard encoding under the Heisenberg Hamiltonian for t in [0, tau].
/// Throws std::invalid_argument unless logical_in has one qubit and N >= 2.
ProtocolResult run_heisenberg_baseline(int N, double lambda, const LogicalState& logical_in,
                                       const ProtocolConfig& cfg);

/// alpha |1> + beta |0> stored in spin 1, using cfg.spec.N, J and lambda.
ProtocolResult run_single_qubit_transfer(cplx alpha, cplx beta, const ProtocolConfig& cfg);

/// Register transfer; `layout` overrides cfg.spec.layout and fixes N.
ProtocolResult run_multi_qubit_transfer(const LogicalState& logical_in, const RegisterLayout& layout,
                                        const ProtocolConfig& cfg);

struct FidelityTrace {
    std::vector<double> times;
    std::vector<double> corrected;
    std::vector<double> uncorrected;
    std::vector<std::size_t> peaks;  // local maxima of `corrected`
};

/// Full-chain traces plus local maxima of the corrected one.
FidelityTrace fidelity_trace(const ProtocolResult& result);

/// Indices i with v[i-1] < v[i] >= v[i+1] (endpoints excluded).
std::vector<std::size_t> local_maxima(const std::vector<double>& v);

}  // namespace dwqst
