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

#include "dwqst/states.hpp"

#include <stdexcept>

namespace dwqst {

namespace {

LogicalState from_terms(int k, std::initializer_list<std::pair<const char*, double>> terms) {
    std::vector<cplx> amps(std::size_t{1} << k);
    for (const auto& [bits, w] : terms) amps[bits_to_index(parse_bits(bits))] = w;
    return LogicalState(k, std::move(amps));
}

}  // namespace

LogicalState named_state(std::string_view label) {
    if (!label.empty() && label.find_first_not_of("01") == std::string_view::npos) {
        return StateVector::from_bits(label);
    }
    if (label == "+") return from_terms(1, {{"0", 1.0}, {"1", 1.0}});
    if (label == "-") return from_terms(1, {{"0", 1.0}, {"1", -1.0}});
    if (label == "psi+") return from_terms(2, {{"11", 1.0}, {"00", 1.0}});
    if (label == "c2") return from_terms(2, {{"00", 1.0}, {"01", 1.0}, {"10", 1.0}, {"11", -1.0}});
    if (label == "ghz") return from_terms(3, {{"111", 1.0}, {"000", 1.0}});
    if (label == "w") return from_terms(3, {{"001", 1.0}, {"010", 1.0}, {"100", 1.0}});
    if (label == "cluster3") return from_terms(3, {{"000", 1.0}, {"011", 1.0}, {"101", 1.0}, {"110", -1.0}});
    throw std::invalid_argument("unknown state label '" + std::string(label) + "'");
}

std::vector<std::string> named_state_labels() {
    return {"+", "-", "psi+", "c2", "ghz", "w", "cluster3"};
}

}  // namespace dwqst
