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
#include <string_view>
#include <vector>

#include "dwqst/encoding.hpp"

namespace dwqst {

/// Named logical payloads:
///   any 0/1 string   computational basis state, e.g. "1", "11", "010"
///   "+", "-"         (|0> +- |1>)/sqrt2
///   "psi+"           (|11> + |00>)/sqrt2
///   "c2"             (|00> + |01> + |10> - |11>)/2
///   "ghz"            (|111> + |000>)/sqrt2
///   "w"              (|001> + |010> + |100>)/sqrt3
///   "cluster3"       (|000> + |011> + |101> - |110>)/2
/// Throws std::invalid_argument for unknown labels.
LogicalState named_state(std::string_view label);

/// Labels accepted by named_state other than raw bit strings.
std::vector<std::string> named_state_labels();

}  // namespace dwqst
