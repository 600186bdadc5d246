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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwqst/analysis.hpp"

// Run manifests and the files written for them.
//
// A manifest is a flat JSON object. Every output file carries the fully
// resolved manifest: CSV files as a leading "# manifest: {...}" line, JSON
// files under the "manifest" key. Floats in CSV use 17 significant digits.

namespace dwqst {

enum class Experiment { Baseline, Single, Multi, Sweep, Consistency };

std::string experiment_name(Experiment e);

/// Invalid manifest content; `field()` names the offending key.
class ManifestError : public std::invalid_argument {
public:
    ManifestError(std::string field, const std::string& message)
        : std::invalid_argument("field '" + field + "': " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct StateSpec {
    std::string label;
    std::optional<std::vector<cplx>> amplitudes;  // overrides the label when set

    LogicalState resolve() const;
};

struct SweepEntry {
    StateSpec state;
    RegisterLayout layout;
};

struct RunManifest {
    Experiment experiment = Experiment::Single;
    std::string unit = "arb";

    int N = 13;
    double J = 22.0;
    double lambda = 1.0;
    StateSpec state{"1", std::nullopt};
    RegisterLayout layout{1, 11, 1};

    PropagatorConfig propagator;
    int n_time_samples = 200;
    bool apply_phase_correction = true;
    double peak_window = 0.05;
    int peak_samples = 101;
    double pin_field = 0.0;
    ResetProfile reset_profile = ResetProfile::ActiveMirror;

    // sweep
    std::vector<double> ratios;
    std::vector<SweepEntry> sweep_states;
    double fit_min = 8.0;
    double fit_max = 40.0;
    double slope_min = -2.3;
    double slope_max = -1.7;
    double min_r_squared = 0.95;

    // consistency
    std::vector<int> N_range;
    int samples = 20;
    double max_deviation = 1e-8;

    /// Chain and protocol settings for single/multi/baseline runs.
    ProtocolConfig protocol_config() const;
};

/// Throws ManifestError.
RunManifest parse_manifest(const nlohmann::json& j);
RunManifest load_manifest(const std::filesystem::path& path);

/// Resolved form: every field that affects the experiment, nothing else.
nlohmann::json to_json(const RunManifest& m);

/// "%.17g"
std::string format_double(double v);

struct RunOutcome {
    std::vector<std::filesystem::path> files;
    bool assertion_passed = true;
    std::string message;  // human-readable summary
};

struct RunOptions {
    int workers = 1;
    bool assert_slope = false;
};

/// Runs the experiment and writes its files into `out_dir` (created if
/// missing). Throws std::runtime_error if a file cannot be written.
RunOutcome run_manifest(const RunManifest& m, const std::filesystem::path& out_dir, const RunOptions& opts = {});

}  // namespace dwqst
