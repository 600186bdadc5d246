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

#include "dwqst/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dwqst {

std::vector<std::string> ProtocolConfig::validate() const {
    propagator.validate();
    if (n_time_samples < 2) throw std::invalid_argument("n_time_samples must be >= 2");
    if (!(peak_window > 0.0 && peak_window < 0.5)) throw std::invalid_argument("peak_window must be in (0, 0.5)");
    if (peak_samples < 2) throw std::invalid_argument("peak_samples must be >= 2");
    if (!std::isfinite(pin_field)) throw std::invalid_argument("pin_field must be finite");
    return spec.validate();
}

namespace {

// (-i)^p
cplx minus_i_pow(int p) {
    static const cplx kTable[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return kTable[((p % 4) + 4) % 4];
}

cplx transfer_phase(int positions, int walls) {
    const cplx hop = minus_i_pow((positions - 1) * walls);
    return (walls * (walls - 1) / 2) % 2 ? -hop : hop;
}

struct Branch {
    cplx amplitude;
    std::uint64_t target_index;  // full chain
    std::uint64_t bob_index;     // Bob's register alone
    cplx transfer;
    double e1;  // stage-1 energy
    double e2;  // stage-2 energy
};

struct Plan {
    int N = 0;
    int k = 0;  // Bob register size
    double tau = 0.0;
    bool two_stage = true;
    bool correct = true;
    std::vector<Branch> branches;
    std::vector<std::uint64_t> bob_to_branch;  // Bob basis index -> branch slot, or npos
};

constexpr std::uint64_t kNone = ~std::uint64_t{0};

double dynamic_phase(const Branch& b, double t, double tau) {
    return b.e1 * std::min(t, tau) + b.e2 * std::max(t - tau, 0.0);
}

cplx target_phase(const Branch& b, double t, const Plan& p, bool corrected) {
    return corrected ? b.transfer * std::polar(1.0, -dynamic_phase(b, t, p.tau)) : b.transfer;
}

double chain_fidelity(const StateVector& psi, double t, const Plan& p, bool corrected) {
    cplx acc{};
    for (const auto& b : p.branches) {
        acc += std::conj(b.amplitude * target_phase(b, t, p, corrected)) * psi[b.target_index];
    }
    return std::min(1.0, std::norm(acc));
}

double logical_fidelity(const Eigen::MatrixXcd& rho, double t, const Plan& p, bool corrected) {
    // Target on Bob's register: sum_b c_b phase_b |b>.
    const auto dim = static_cast<Eigen::Index>(rho.rows());
    Eigen::VectorXcd target = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto slot = p.bob_to_branch[static_cast<std::size_t>(i)];
        if (slot == kNone) continue;
        const auto& b = p.branches[slot];
        target(i) = b.amplitude * target_phase(b, t, p, corrected);
    }
    const double f = std::real(target.dot(rho * target));
    return std::clamp(f, 0.0, 1.0);
}

struct Sampler {
    const Plan& plan;
    ProtocolResult& r;

    void record(const StateVector& psi, double t) {
        r.times.push_back(t);
        r.chain_corrected.push_back(chain_fidelity(psi, t, plan, true));
        r.chain_uncorrected.push_back(chain_fidelity(psi, t, plan, false));
        const Eigen::MatrixXcd rho = reduced_density_matrix(psi, plan.N - plan.k + 1, plan.k);
        r.logical_corrected.push_back(logical_fidelity(rho, t, plan, true));
        r.logical_uncorrected.push_back(logical_fidelity(rho, t, plan, false));
        for (int s = 1; s <= plan.N; ++s) r.sigma_z[static_cast<std::size_t>(s - 1)].push_back(sigma_z_expectation(psi, s));
    }
};

// Bob's register conditioned on the rest of the chain reading |0..0>, with the
// target phases divided out when requested, then decoded and un-mirrored.
LogicalState read_bob(const StateVector& psi, double t, const Plan& p) {
    const std::size_t dim = std::size_t{1} << p.k;
    std::vector<cplx> bob(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        cplx a = psi[b];
        const auto slot = p.bob_to_branch[b];
        if (slot != kNone) a *= std::conj(target_phase(p.branches[slot], t, p, p.correct));
        bob[b] = a;
    }
    double nsq = 0.0;
    for (auto a : bob) nsq += std::norm(a);
    if (!(nsq > 0.0)) return StateVector::basis(p.k, 0);
    const LogicalState decoded = dw_decode(StateVector(p.k, std::move(bob)), 0);
    // The mirror reverses the order of the logical qubits.
    std::vector<cplx> out(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        Bits bits = index_to_bits(i, p.k);
        std::reverse(bits.begin(), bits.end());
        out[bits_to_index(bits)] = decoded[i];
    }
    return LogicalState(p.k, std::move(out));
}

void init_result(ProtocolResult& r, const Plan& p, const LogicalState& in) {
    r.tau = p.tau;
    r.readout_time = p.two_stage ? 2.0 * p.tau : p.tau;
    r.input = in;
    r.sigma_z.assign(static_cast<std::size_t>(p.N), {});
}

void finish_result(ProtocolResult& r, const Plan& p, const StateVector& last) {
    const std::size_t i = r.times.size() - 1;
    r.final_state = last;
    r.final_fidelity = p.correct ? r.logical_corrected[i] : r.logical_uncorrected[i];
    r.chain_fidelity = p.correct ? r.chain_corrected[i] : r.chain_uncorrected[i];
    r.final_logical = read_bob(last, r.times[i], p);
}

// Evolves through `stages` (Hamiltonian, duration) with n samples per stage.
StateVector run_stages(const std::vector<std::pair<const Operator*, double>>& stages, const StateVector& psi0,
                       int n, const PropagatorConfig& pcfg, Sampler& sampler,
                       std::vector<StateVector>* stage_starts) {
    StateVector psi = psi0;
    double t0 = 0.0;
    sampler.record(psi, 0.0);
    for (const auto& [h, duration] : stages) {
        if (stage_starts) stage_starts->push_back(psi);
        const Propagator prop(*h, pcfg);
        const double dt = duration / n;
        for (int i = 1; i <= n; ++i) {
            psi = prop.evolve(psi, dt);
            sampler.record(psi, t0 + duration * i / n);
        }
        t0 += duration;
    }
    return psi;
}

Plan make_dw_plan(const LogicalState& in, const ChainSpec& spec, double pin_field, bool correct) {
    Plan p;
    p.N = spec.N;
    p.k = spec.layout.n_alice;
    p.tau = std::numbers::pi / spec.lambda;
    p.two_stage = true;
    p.correct = correct;
    p.bob_to_branch.assign(std::size_t{1} << p.k, kNone);
    const int positions2 = spec.layout.active() + 1;
    for (std::uint64_t li = 0; li < in.dim(); ++li) {
        if (in[li] == cplx{}) continue;
        const Bits logical = index_to_bits(li, p.k);
        const Bits alice = dw_encode_bits(logical, {0, 0}, Anchor::Wire);
        Bits mirrored(logical.rbegin(), logical.rend());
        const Bits bob = dw_encode_bits(mirrored, {0, 0}, Anchor::Wire);

        const int m1 = static_cast<int>(std::count(logical.begin(), logical.end(), 1));
        Bits padded{0};
        padded.insert(padded.end(), bob.begin(), bob.end());
        const int m2 = count_internal_walls(padded);

        Branch b;
        b.amplitude = in[li];
        b.bob_index = bits_to_index(bob);
        b.target_index = b.bob_index;  // the first N - k spins are |0>
        b.transfer = transfer_phase(p.N, m1) * transfer_phase(positions2, bob.front());
        b.e1 = energy_offset(p.N, m1, spec.J);
        if (pin_field != 0.0) b.e1 += alice.front() ? -pin_field : pin_field;
        b.e2 = energy_offset(p.N, m2, spec.J);
        p.bob_to_branch[b.bob_index] = p.branches.size();
        p.branches.push_back(b);
    }
    return p;
}

StateVector dw_initial_state(const LogicalState& in, int N) {
    const int k = in.n_spins();
    std::vector<cplx> amps(std::size_t{1} << N);
    for (std::uint64_t li = 0; li < in.dim(); ++li) {
        if (in[li] == cplx{}) continue;
        const Bits alice = dw_encode_bits(index_to_bits(li, k), {0, 0}, Anchor::Wire);
        amps[bits_to_index(alice) << (N - k)] = in[li];
    }
    return StateVector(N, std::move(amps));
}

PauliSum pinned_transport(const ChainSpec& spec, double pin_field) {
    PauliSum h = transport_hamiltonian(spec);
    h.add(coupling_profile(spec.N, spec.lambda).at(1), {{1, Pauli::X}});
    h.add(pin_field, {{1, Pauli::Z}});
    return h;
}

}  // namespace

ProtocolResult run_heisenberg_baseline(int N, double lambda, const LogicalState& logical_in,
                                       const ProtocolConfig& cfg) {
    if (logical_in.n_spins() != 1) throw std::invalid_argument("baseline transfers a single qubit");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    cfg.propagator.validate();
    if (cfg.n_time_samples < 2) throw std::invalid_argument("n_time_samples must be >= 2");

    Plan p;
    p.N = N;
    p.k = 1;
    p.tau = std::numbers::pi / lambda;
    p.two_stage = false;
    p.correct = cfg.apply_phase_correction;
    p.bob_to_branch.assign(2, kNone);
    for (std::uint64_t l = 0; l < 2; ++l) {
        if (logical_in[l] == cplx{}) continue;
        p.bob_to_branch[l] = p.branches.size();
        p.branches.push_back({logical_in[l], l, l, transfer_phase(N, static_cast<int>(l)), 0.0, 0.0});
    }

    std::vector<cplx> amps(std::size_t{1} << N);
    amps[0] = logical_in[0];
    amps[std::size_t{1} << (N - 1)] = logical_in[1];
    const StateVector psi0(N, std::move(amps));

    const Operator h = realize(heisenberg_xy(N, lambda));
    ProtocolResult r;
    init_result(r, p, logical_in);
    Sampler sampler{p, r};
    const StateVector last = run_stages({{&h, p.tau}}, psi0, cfg.n_time_samples, cfg.propagator, sampler, nullptr);
    finish_result(r, p, last);
    r.phases = phase_ledger(N, 0.0, p.tau, 1);
    for (const auto& b : p.branches) {
        BranchPhase bp;
        bp.logical = b.bob_index ? "1" : "0";
        bp.initial = b.bob_index ? "1" + std::string(static_cast<std::size_t>(N - 1), '0') : std::string(static_cast<std::size_t>(N), '0');
        bp.target = format_bits(index_to_bits(b.target_index, N));
        bp.walls_stage1 = static_cast<int>(b.bob_index);
        bp.transfer_phase = std::arg(b.transfer);
        r.branches.push_back(bp);
    }
    r.peak = {r.readout_time, r.final_fidelity, r.chain_fidelity};
    return r;
}

ProtocolResult run_multi_qubit_transfer(const LogicalState& logical_in, const RegisterLayout& layout,
                                        const ProtocolConfig& cfg_in) {
    ProtocolConfig cfg = cfg_in;
    cfg.spec.layout = layout;
    cfg.spec.N = layout.total();
    auto warnings = cfg.validate();
    if (logical_in.n_spins() != layout.n_alice) {
        throw std::invalid_argument("logical state has " + std::to_string(logical_in.n_spins()) +
                                    " qubits but layout.n_alice is " + std::to_string(layout.n_alice));
    }
    const ChainSpec& spec = cfg.spec;
    const Plan p = make_dw_plan(logical_in, spec, cfg.pin_field, cfg.apply_phase_correction);

    const Operator h1 = realize(cfg.pin_field != 0.0 ? pinned_transport(spec, cfg.pin_field)
                                                       : transport_hamiltonian(spec));
    const Operator h2 = realize(multiqubit_reset_hamiltonian(spec));

    ProtocolResult r;
    init_result(r, p, logical_in);
    r.warnings = std::move(warnings);
    Sampler sampler{p, r};
    std::vector<StateVector> starts;
    const StateVector last = run_stages({{&h1, p.tau}, {&h2, p.tau}}, dw_initial_state(logical_in, spec.N),
                                        cfg.n_time_samples, cfg.propagator, sampler, &starts);
    finish_result(r, p, last);
    r.phases = phase_ledger(spec.N, spec.J, p.tau, 2);

    for (const auto& b : p.branches) {
        BranchPhase bp;
        Bits bob = index_to_bits(b.bob_index, p.k);
        const Bits logical_b = dw_read(bob, {0, 0}, Anchor::Wire);
        bp.logical = format_bits(Bits(logical_b.rbegin(), logical_b.rend()));
        const Bits alice = dw_encode_bits(parse_bits(bp.logical), {0, 0}, Anchor::Wire);
        bp.initial = format_bits(alice) + std::string(static_cast<std::size_t>(spec.N - p.k), '0');
        bp.target = format_bits(index_to_bits(b.target_index, spec.N));
        bp.walls_stage1 = static_cast<int>(std::count(bp.logical.begin(), bp.logical.end(), '1'));
        Bits padded{0};
        padded.insert(padded.end(), bob.begin(), bob.end());
        bp.walls_stage2 = count_internal_walls(padded);
        bp.transfer_phase = std::arg(b.transfer);
        bp.dynamic_phase = dynamic_phase(b, 2.0 * p.tau, p.tau);
        r.branches.push_back(bp);
    }

    // Peak search in [2 tau (1 - w), 2 tau (1 + w)] under the stage-2 Hamiltonian.
    const double lo = 2.0 * p.tau * (1.0 - cfg.peak_window);
    const double hi = 2.0 * p.tau * (1.0 + cfg.peak_window);
    const Propagator prop2(h2, cfg.propagator);
    StateVector psi = prop2.evolve(starts.at(1), lo - p.tau);
    const int ns = cfg.peak_samples;
    PeakInfo best{-1.0, -1.0, -1.0};
    for (int i = 0; i < ns; ++i) {
        const double t = lo + (hi - lo) * i / (ns - 1);
        if (i > 0) psi = prop2.evolve(psi, (hi - lo) / (ns - 1));
        const Eigen::MatrixXcd rho = reduced_density_matrix(psi, spec.N - p.k + 1, p.k);
        const double f = logical_fidelity(rho, t, p, p.correct);
        if (f > best.logical_fidelity) best = {t, f, chain_fidelity(psi, t, p, p.correct)};
    }
    r.peak = best;
    return r;
}

ProtocolResult run_single_qubit_transfer(cplx alpha, cplx beta, const ProtocolConfig& cfg) {
    const double nsq = std::norm(alpha) + std::norm(beta);
    if (std::abs(nsq - 1.0) > 1e-10) throw std::invalid_argument("|alpha|^2 + |beta|^2 must equal 1");
    const LogicalState in(1, {beta, alpha});
    if (cfg.spec.N < 2) throw std::invalid_argument("N must be >= 2");
    return run_multi_qubit_transfer(in, RegisterLayout{1, cfg.spec.N - 2, 1}, cfg);
}

std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i - 1] < v[i] && v[i] >= v[i + 1]) out.push_back(i);
    }
    return out;
}

FidelityTrace fidelity_trace(const ProtocolResult& result) {
    FidelityTrace out{result.times, result.chain_corrected, result.chain_uncorrected, {}};
    out.peaks = local_maxima(out.corrected);
    return out;
}

}  // namespace dwqst
