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

#include <map>
#include <span>

#include "dwqst/state.hpp"

// Domain-wall codec. Logical qubit j sits on the interface between physical
// spins j and j+1 of a padded chain; a 1 means the two spins differ.
//
// Two anchorings are supported:
//   Wire          padded = register + [right_context]. Used by the protocol:
//                 the last register spin meets the wire without a wall, so
//                 the wire can stay all-down.
//   LeftBoundary  padded = [left_value] + register.
// For a single logical qubit with a |0> anchor both reduce to storing the
// logical value directly in physical spin 1.

namespace dwqst {

/// Logical payloads share the amplitude layout of StateVector.
using LogicalState = StateVector;

struct BoundaryContext {
    std::uint8_t left_value = 0;
    std::uint8_t right_context = 0;
};

enum class Anchor { Wire, LeftBoundary };

/// Physical register bits (length k) for a logical string of length k.
Bits dw_encode_bits(std::span<const std::uint8_t> logical, BoundaryContext ctx, Anchor anchor = Anchor::Wire);

/// Interface readout, the inverse of dw_encode_bits.
Bits dw_read(std::span<const std::uint8_t> physical, BoundaryContext ctx, Anchor anchor = Anchor::Wire);

/// Linear extension of dw_encode_bits over the computational basis.
StateVector dw_encode_state(const LogicalState& logical, BoundaryContext ctx, Anchor anchor = Anchor::Wire);

/// Inverse of dw_encode_state with `reference` as the right anchor, i.e. the
/// recorded value of the switched-off boundary field next to Bob's register.
LogicalState dw_decode(const StateVector& physical, std::uint8_t reference);

/// Adjacent unequal pairs in [left_value] + bits + [right_context].
int count_domain_walls(std::span<const std::uint8_t> bits, BoundaryContext ctx);

/// Adjacent unequal pairs within `bits` only.
int count_internal_walls(std::span<const std::uint8_t> bits);

/// exp(+i tau J sum_{n=1}^{N-1} Z_n Z_{n+1}), applied as a diagonal phase.
StateVector offset_correction(const StateVector& state, double J, double tau);

struct PhaseLedger {
    double global_phase = 0.0;              // stages * J N tau
    std::map<int, double> relative_phase;   // M -> phase of the M-wall branch relative to M = 0
};

/// Dynamic phase angles phi = E t of the M-wall sectors after `stages`
/// stages of length tau. A branch carries exp(-i phi).
/// Throws std::invalid_argument unless stages is 1 or 2.
PhaseLedger phase_ledger(int N, double J, double tau, int stages);

}  // namespace dwqst
