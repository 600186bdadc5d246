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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dwqst/analysis.hpp"
#include "dwqst/states.hpp"

using namespace dwqst;

namespace {

ProtocolConfig sweep_base() {
    ProtocolConfig cfg;
    cfg.spec.lambda = 1.0;
    cfg.n_time_samples = 60;
    return cfg;
}

const SweepTable& single_qubit_table() {
    static const SweepTable table = [] {
        const std::vector<SweepItem> items{{"1", named_state("1"), {1, 7, 1}}};
        return error_scaling_sweep(items, {4, 8, 12, 16, 24, 32, 40}, sweep_base());
    }();
    return table;
}

double eps_at(const SweepTable& t, double ratio) {
    for (const auto& r : t.rows) {
        if (r.ratio == ratio) return r.infidelity;
    }
    throw std::logic_error("ratio not in table");
}

}  // namespace

TEST_CASE("log-log fit recovers a power law") {
    std::vector<double> x, y;
    for (double v : {2.0, 3.0, 5.0, 7.0, 11.0}) {
        x.push_back(v);
        y.push_back(3.0 * std::pow(v, -2.0));
    }
    const auto f = fit_loglog(x, y);
    CHECK(f.available);
    CHECK(f.slope == doctest::Approx(-2.0));
    CHECK(f.intercept == doctest::Approx(std::log(3.0)));
    CHECK(f.r_squared == doctest::Approx(1.0));
    CHECK(f.residual < 1e-12);
    CHECK_FALSE(fit_loglog({1.0, 2.0}, {1.0, 2.0}).available);
    CHECK_FALSE(fit_loglog({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0}).available);
    CHECK_THROWS_AS(fit_loglog({1.0, 2.0, 3.0}, {1.0, -2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("single-qubit error scaling is quadratic") {
    const auto& t = single_qubit_table();
    REQUIRE(t.rows.size() == 7);
    const auto& f = t.fits.at("1");
    REQUIRE(f.available);
    CHECK(f.points == 6);
    CHECK(f.slope >= -2.3);
    CHECK(f.slope <= -1.7);
    CHECK(f.r_squared >= 0.95);
    for (const auto& r : t.rows) CHECK(r.in_fit == (r.ratio >= 8.0));
}

TEST_CASE("doubling J / lambda divides the error by about four") {
    const auto& t = single_qubit_table();
    for (double r : {8.0, 12.0, 16.0}) {
        const double drop = eps_at(t, r) / eps_at(t, 2.0 * r);
        CHECK(std::abs(std::log(drop / 4.0)) <= 0.3 * std::log(2.0));
    }
}

TEST_CASE("ratio 4 falls off the quadratic line") {
    const auto& t = single_qubit_table();
    const auto& f = t.fits.at("1");
    const double predicted = f.intercept + f.slope * std::log(4.0);
    CHECK(std::abs(std::log(eps_at(t, 4.0)) - predicted) > 10.0 * f.residual);
}

TEST_CASE("sweep output does not depend on the worker count") {
    const std::vector<SweepItem> items{{"1", named_state("1"), {1, 4, 1}}, {"psi+", named_state("psi+"), {2, 1, 2}}};
    SweepOptions one, three;
    three.workers = 3;
    const auto a = error_scaling_sweep(items, {8, 16, 32}, sweep_base(), one);
    const auto b = error_scaling_sweep(items, {8, 16, 32}, sweep_base(), three);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].state == b.rows[i].state);
        CHECK(a.rows[i].ratio == b.rows[i].ratio);
        CHECK(a.rows[i].infidelity == b.rows[i].infidelity);
        CHECK(a.rows[i].transfer_time == b.rows[i].transfer_time);
    }
    CHECK(a.rows[0].state == "1");
    CHECK(a.rows[3].state == "psi+");
}

TEST_CASE("single ratio leaves the fit unavailable") {
    const std::vector<SweepItem> items{{"1", named_state("1"), {1, 3, 1}}};
    const auto t = error_scaling_sweep(items, {22.0}, sweep_base());
    CHECK(t.rows.size() == 1);
    CHECK_FALSE(t.fits.at("1").available);
}

TEST_CASE("sweep input validation") {
    const std::vector<SweepItem> bad{{"11", named_state("11"), {1, 3, 1}}};
    CHECK_THROWS_AS(error_scaling_sweep(bad, {22.0}, sweep_base()), std::invalid_argument);
    const std::vector<SweepItem> ok{{"1", named_state("1"), {1, 3, 1}}};
    CHECK_THROWS_AS(error_scaling_sweep(ok, {}, sweep_base()), std::invalid_argument);
    CHECK_THROWS_AS(error_scaling_sweep(ok, {-1.0}, sweep_base()), std::invalid_argument);
}

TEST_CASE("rescaling law") {
    const RescalingModel m{3.0, 1};
    const double a = m.lambda_for(0.02, 100.0, 2.0);
    CHECK(m.lambda_for(0.01, 100.0, 2.0) / a == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(m.lambda_for(1.0 - 1e-12, 100.0, 2.0) == doctest::Approx(3.0 * 100.0 / 2.0));
    CHECK(rescaling_tradeoff(0.02, 100.0, 2.0, m) == a);
    CHECK_THROWS_AS(m.lambda_for(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(m.lambda_for(0.5, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("calibrated rescaling recovers the headline coupling") {
    ProtocolConfig base = sweep_base();
    base.n_time_samples = 40;
    const std::vector<SweepItem> items{{"1", named_state("1"), {1, 11, 1}}};
    const auto t = error_scaling_sweep(items, {8, 16, 32}, base);
    const auto model = calibrate_rescaling(t, "1");
    CHECK(model.samples == 3);
    // J = 500, eps about 0.01, two stages of pi / lambda: t = 2 pi in units of 1 / lambda.
    const double lambda = model.lambda_for(0.01, 500.0, 2.0 * std::numbers::pi);
    CHECK(lambda > 22.72 / 2.0);
    CHECK(lambda < 22.72 * 2.0);
    CHECK_THROWS_AS(calibrate_rescaling(t, "missing"), std::runtime_error);
}

TEST_CASE("closed-form consistency") {
    const auto rep = closed_form_consistency({2, 3, 4, 5, 6, 7, 8, 9, 10}, 1.0, 20);
    CHECK(rep.samples.size() == 180);
    CHECK(rep.max_abs_deviation <= 1e-8);
    const auto three = closed_form_consistency({2, 6, 11}, 1.0, 3);
    for (const auto& s : three.samples) {
        if (s.t == 0.0) CHECK(std::abs(s.numeric) < 1e-14);
        if (s.t == std::numbers::pi) CHECK(std::abs(s.numeric) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(closed_form_consistency({13}, 1.0, 2), std::invalid_argument);
}
