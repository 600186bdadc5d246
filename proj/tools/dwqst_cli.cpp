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

// dwqst: run a manifest and write its trace files.
//
// Exit codes: 0 success, 1 invalid input (or unwritable output), 2 assertion
// failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dwqst/manifest.hpp"

namespace {

constexpr int kInvalid = 1;
constexpr int kAssertion = 2;

int finish(const dwqst::RunManifest& m, const std::string& out, const dwqst::RunOptions& opts) {
    const dwqst::RunOutcome outcome = dwqst::run_manifest(m, out, opts);
    for (const auto& f : outcome.files) std::cout << "wrote " << f.string() << "\n";
    if (!outcome.message.empty()) {
        std::cout << outcome.message;
        if (outcome.message.back() != '\n') std::cout << "\n";
    }
    if (!outcome.assertion_passed) {
        std::cerr << "dwqst: assertion failed\n";
        return kAssertion;
    }
    return 0;
}

void expect(const dwqst::RunManifest& m, std::initializer_list<dwqst::Experiment> allowed, const char* command) {
    for (auto e : allowed) {
        if (m.experiment == e) return;
    }
    throw dwqst::ManifestError("experiment", "'" + dwqst::experiment_name(m.experiment) +
                                                 "' cannot be run by the " + command + " command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domain-wall two-step state transfer on transverse-field Ising chains"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    int workers = 1;
    bool assert_slope = false;

    auto* baseline = app.add_subcommand("baseline", "Heisenberg-chain transfer baseline");
    std::optional<int> n;
    std::optional<double> lambda;
    std::optional<std::string> state;
    baseline->add_option("--config", config, "JSON manifest (experiment: baseline)")->check(CLI::ExistingFile);
    baseline->add_option("--n", n, "chain length");
    baseline->add_option("--lambda", lambda, "coupling scale");
    baseline->add_option("--state", state, "one-qubit input: 0, 1, +, -");
    baseline->add_option("--out", out, "output directory")->required();

    auto* transfer = app.add_subcommand("transfer", "Two-stage domain-wall transfer (single or multi)");
    transfer->add_option("--config", config, "JSON manifest")->required()->check(CLI::ExistingFile);
    transfer->add_option("--out", out, "output directory")->required();

    auto* sweep = app.add_subcommand("sweep", "Error scaling against J/lambda");
    sweep->add_option("--config", config, "JSON manifest")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "output directory")->required();
    sweep->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    sweep->add_flag("--assert-slope", assert_slope, "exit 2 unless every fitted slope lies in the band");

    auto* consistency = app.add_subcommand("consistency", "Dense propagation against the closed-form amplitude");
    consistency->add_option("--config", config, "JSON manifest")->required()->check(CLI::ExistingFile);
    consistency->add_option("--out", out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalid;
    }

    dwqst::RunOptions opts;
    opts.workers = workers;
    opts.assert_slope = assert_slope;

    try {
        dwqst::RunManifest m;
        if (baseline->parsed()) {
            nlohmann::json j = nlohmann::json::object();
            if (!config.empty()) {
                m = dwqst::load_manifest(config);
                expect(m, {dwqst::Experiment::Baseline}, "baseline");
                j = dwqst::to_json(m);
            }
            j["experiment"] = "baseline";
            if (n) j["N"] = *n;
            if (lambda) j["lambda"] = *lambda;
            if (state) j["state"] = *state;
            m = dwqst::parse_manifest(j);
        } else {
            m = dwqst::load_manifest(config);
            if (transfer->parsed()) expect(m, {dwqst::Experiment::Single, dwqst::Experiment::Multi}, "transfer");
            if (sweep->parsed()) expect(m, {dwqst::Experiment::Sweep}, "sweep");
            if (consistency->parsed()) expect(m, {dwqst::Experiment::Consistency}, "consistency");
        }
        return finish(m, out, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "dwqst: invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "dwqst: " << e.what() << "\n";
        return kInvalid;
    }
}
