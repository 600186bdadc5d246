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

#include "dwqst/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace dwqst {

FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
    FitResult fit;
    fit.points = static_cast<int>(x.size());
    if (x.size() < 3) return fit;
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_loglog: values must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0.0) return fit;
    fit.available = true;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss_res += r * r;
    }
    fit.residual = std::sqrt(ss_res / n);
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

SweepTable error_scaling_sweep(const std::vector<SweepItem>& items, const std::vector<double>& ratios,
                               const ProtocolConfig& base, const SweepOptions& options) {
    if (items.empty() || ratios.empty()) throw std::invalid_argument("sweep needs at least one state and one ratio");
    for (double r : ratios) {
        if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("sweep ratios must be positive");
    }
    for (const auto& item : items) {
        item.layout.validate();
        if (item.state.n_spins() != item.layout.n_alice) {
            throw std::invalid_argument("sweep state '" + item.label + "' does not match its layout");
        }
    }

    const std::size_t total = items.size() * ratios.size();
    std::vector<SweepRow> rows(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total) return;
            const auto& item = items[job / ratios.size()];
            const double ratio = ratios[job % ratios.size()];
            try {
                ProtocolConfig cfg = base;
                cfg.spec.J = ratio * base.spec.lambda;
                cfg.spec.N = item.layout.total();
                cfg.spec.layout = item.layout;
                const ProtocolResult r = run_multi_qubit_transfer(item.state, item.layout, cfg);
                SweepRow row;
                row.state = item.label;
                row.ratio = ratio;
                row.infidelity = std::clamp(1.0 - r.peak.logical_fidelity, 0.0, 1.0);
                row.transfer_time = r.peak.time;
                row.in_fit = ratio >= options.fit_min && ratio <= options.fit_max && row.infidelity > options.floor;
                rows[job] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next.store(total);
            }
        }
    };

    const int n_workers = std::max(1, std::min<int>(options.workers, static_cast<int>(total)));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    SweepTable table;
    table.lambda = base.spec.lambda;
    table.options = options;
    table.rows = std::move(rows);
    for (const auto& item : items) {
        std::vector<double> x, y;
        for (const auto& row : table.rows) {
            if (row.state == item.label && row.in_fit) {
                x.push_back(row.ratio);
                y.push_back(row.infidelity);
            }
        }
        table.fits[item.label] = fit_loglog(x, y);
    }
    return table;
}

double RescalingModel::lambda_for(double epsilon_target, double J, double t) const {
    if (!(epsilon_target > 0.0 && epsilon_target < 1.0)) {
        throw std::invalid_argument("epsilon_target must be in (0, 1)");
    }
    if (!(t > 0.0)) throw std::invalid_argument("t must be > 0");
    return c * std::abs(J) * std::sqrt(epsilon_target) / t;
}

RescalingModel calibrate_rescaling(const SweepTable& table, const std::string& state) {
    double log_sum = 0.0;
    int n = 0;
    for (const auto& row : table.rows) {
        if (row.state != state || !row.in_fit) continue;
        // lambda T is the duration in units of 1/lambda; |J| / lambda = ratio.
        const double c = table.lambda * row.transfer_time / (row.ratio * std::sqrt(row.infidelity));
        log_sum += std::log(c);
        ++n;
    }
    if (n == 0) throw std::runtime_error("no calibration data for state '" + state + "'");
    return {std::exp(log_sum / n), n};
}

double rescaling_tradeoff(double epsilon_target, double J, double t, const RescalingModel& model) {
    return model.lambda_for(epsilon_target, J, t);
}

ConsistencyReport closed_form_consistency(const std::vector<int>& N_range, double lambda, int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    ConsistencyReport report;
    const double t_max = 2.0 * std::numbers::pi / lambda;
    for (int N : N_range) {
        if (N < 2 || N > 12) throw std::invalid_argument("closed_form_consistency: N must be in [2, 12]");
        const Operator h = realize(heisenberg_xy(N, lambda));
        const ExactPropagator prop(h);
        const StateVector start = StateVector::basis(N, std::uint64_t{1} << (N - 1));
        for (int i = 0; i < samples; ++i) {
            const double t = samples == 1 ? 0.0 : t_max * i / (samples - 1);
            const StateVector psi = prop.evolve(start, t);
            ConsistencySample s{N, t, psi[1], transfer_amplitude_closed_form(N, lambda, t)};
            report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(s.numeric - s.closed_form));
            report.samples.push_back(s);
        }
    }
    return report;
}

double sector_spectral_distance(int N, double ratio, double lambda) {
    if (N < 2 || N > 10) throw std::invalid_argument("sector_spectral_distance: N must be in [2, 10]");
    ChainSpec spec;
    spec.N = N;
    spec.lambda = lambda;
    spec.J = ratio * lambda;
    const Operator dw = realize(ising_dw(spec));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dw.to_dense().real(), Eigen::EigenvaluesOnly);
    std::vector<double> full(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());

    // Walls live on the N+1 interfaces; the wall between spin n and n+1 hops
    // with amplitude t_n, exactly like an excitation of an (N+1)-site XY chain.
    const auto prof = coupling_profile(N, lambda);
    const int sites = N + 1;
    PauliSum xy(sites);
    for (int p = 1; p < N; ++p) {
        xy.add(0.5 * prof.at(p), {{p, Pauli::X}, {p + 1, Pauli::X}});
        xy.add(0.5 * prof.at(p), {{p, Pauli::Y}, {p + 1, Pauli::Y}});
    }
    const Eigen::MatrixXd hxy = realize(xy).to_dense().real();
    const int parity = (spec.boundary.left == VirtualSpin::Up) != (spec.boundary.right == VirtualSpin::Up);
    std::vector<double> blocks;
    for (int m = parity; m <= sites; m += 2) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < hxy.rows(); ++i) {
            if (std::popcount(static_cast<std::uint64_t>(i)) == m) idx.push_back(i);
        }
        if (idx.empty()) continue;
        const auto d = static_cast<Eigen::Index>(idx.size());
        Eigen::MatrixXd block(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index b = 0; b < d; ++b) block(a, b) = hxy(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bs(block, Eigen::EigenvaluesOnly);
        const double offset = spec.J * static_cast<double>(sites - 2 * m);
        for (Eigen::Index i = 0; i < d; ++i) blocks.push_back(bs.eigenvalues()(i) + offset);
    }
    if (blocks.size() != full.size()) throw std::logic_error("sector bookkeeping does not cover the Hilbert space");
    std::sort(full.begin(), full.end());
    std::sort(blocks.begin(), blocks.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < full.size(); ++i) worst = std::max(worst, std::abs(full[i] - blocks[i]));
    return worst;
}

}  // namespace dwqst
