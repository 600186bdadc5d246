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
#include <string>
#include <vector>

#include "dwqst/protocol.hpp"

namespace dwqst {

struct SweepItem {
    std::string label;
    LogicalState state;
    RegisterLayout layout;
};

struct SweepRow {
    std::string state;
    double ratio = 0.0;          // J / lambda
    double infidelity = 0.0;     // 1 - corrected peak logical fidelity
    double transfer_time = 0.0;  // time of that peak
    bool in_fit = false;
};

struct FitResult {
    bool available = false;
    int points = 0;
    double slope = 0.0;      // d log(eps) / d log(J/lambda)
    double intercept = 0.0;  // natural log
    double residual = 0.0;   // RMS of log residuals
    double r_squared = 0.0;
};

struct SweepOptions {
    double fit_min = 8.0;
    double fit_max = 40.0;
    double floor = 1e-12;  // rows at or below this infidelity are left out of the fit
    int workers = 1;
};

struct SweepTable {
    double lambda = 1.0;
    SweepOptions options;
    std::vector<SweepRow> rows;             // ordered by (item, ratio) as given
    std::map<std::string, FitResult> fits;  // keyed by state label
};

/// Least-squares fit of log y against log x.
FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Runs the full protocol for every (item, ratio) pair. J = ratio * lambda
/// with lambda from base.spec. Output order and values do not depend on the
/// worker count.
SweepTable error_scaling_sweep(const std::vector<SweepItem>& items, const std::vector<double>& ratios,
                               const ProtocolConfig& base, const SweepOptions& options = {});

/// lambda = c |J| sqrt(eps) / t, with t the protocol duration in units of 1/lambda.
struct RescalingModel {
    double c = 0.0;
    int samples = 0;

    /// Throws std::invalid_argument unless 0 < epsilon_target < 1 and t > 0.
    double lambda_for(double epsilon_target, double J, double t) const;
};

/// c as the geometric mean of lambda T / (|J| sqrt(eps)) over the fit rows of
/// `state`. Throws std::runtime_error when no row qualifies.
RescalingModel calibrate_rescaling(const SweepTable& table, const std::string& state);

double rescaling_tradeoff(double epsilon_target, double J, double t, const RescalingModel& model);

struct ConsistencySample {
    int N = 0;
    double t = 0.0;
    cplx numeric;
    cplx closed_form;
};

struct ConsistencyReport {
    double max_abs_deviation = 0.0;
    std::vector<ConsistencySample> samples;
};

/// Dense-propagator check of the closed-form transfer amplitude at `samples`
/// evenly spaced times in [0, 2 pi / lambda]. Throws for N outside [2, 12].
ConsistencyReport closed_form_consistency(const std::vector<int>& N_range, double lambda, int samples);

/// Largest gap between the sorted spectrum of ising_dw (left Up, right Down)
/// and the union of Heisenberg M-excitation blocks shifted by their energy
/// offsets. Shrinks as J / lambda grows.
double sector_spectral_distance(int N, double ratio, double lambda = 1.0);

}  // namespace dwqst
