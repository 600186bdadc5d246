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

#include "dwqst/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <Eigen/Eigenvalues>

namespace dwqst {

std::string_view method_name(PropagatorMethod m) {
    return m == PropagatorMethod::Krylov ? "krylov" : "exact-eigendecomposition";
}

PropagatorMethod parse_method(std::string_view name) {
    if (name == "krylov") return PropagatorMethod::Krylov;
    if (name == "exact" || name == "exact-eigendecomposition") return PropagatorMethod::ExactEigendecomposition;
    throw std::invalid_argument("unknown propagator method '" + std::string(name) + "'");
}

void PropagatorConfig::validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("propagator tolerance must be > 0");
    if (krylov_dim < 2) throw std::invalid_argument("krylov_dim must be >= 2");
    if (!(max_step >= 0.0)) throw std::invalid_argument("max_step must be >= 0");
}

namespace {

void check_evolve_args(const StateVector& psi, std::size_t dim, double t) {
    if (psi.dim() != dim) {
        throw std::invalid_argument("evolve: state dimension " + std::to_string(psi.dim()) +
                                    " does not match operator dimension " + std::to_string(dim));
    }
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("evolve: t must be finite and >= 0");
}

}  // namespace

// ---------------------------------------------------------------------------

ExactPropagator::ExactPropagator(const Operator& h) : dim_(h.dim()), real_(h.is_real()) {
    if (real_) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.to_dense().real());
        if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
        evals_ = es.eigenvalues();
        vecs_real_ = es.eigenvectors();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_dense());
        if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
        evals_ = es.eigenvalues();
        vecs_complex_ = es.eigenvectors();
    }
}

StateVector ExactPropagator::evolve(const StateVector& psi, double t) const {
    check_evolve_args(psi, dim_, t);
    if (t == 0.0) return psi;
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::Map<const Eigen::VectorXcd> in(psi.amplitudes().data(), n);
    Eigen::VectorXcd phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::polar(1.0, -evals_(i) * t);

    Eigen::VectorXcd out;
    if (real_) {
        const Eigen::VectorXd re = in.real();
        const Eigen::VectorXd im = in.imag();
        Eigen::VectorXcd c(n);
        c.real() = vecs_real_.transpose() * re;
        c.imag() = vecs_real_.transpose() * im;
        c = c.cwiseProduct(phases);
        const Eigen::VectorXd cre = c.real();
        const Eigen::VectorXd cim = c.imag();
        out.resize(n);
        out.real() = vecs_real_ * cre;
        out.imag() = vecs_real_ * cim;
    } else {
        out = vecs_complex_ * (vecs_complex_.adjoint() * in).cwiseProduct(phases);
    }
    return StateVector(psi.n_spins(), std::vector<cplx>(out.data(), out.data() + n));
}

// ---------------------------------------------------------------------------

KrylovPropagator::KrylovPropagator(const Operator& h, PropagatorConfig cfg)
    : KrylovPropagator(h, cfg, simd::active()) {}

KrylovPropagator::KrylovPropagator(const Operator& h, PropagatorConfig cfg, const simd::KernelTable& kernels)
    : h_(&h), cfg_(cfg), k_(&kernels) {
    cfg_.validate();
}

StateVector KrylovPropagator::evolve(const StateVector& psi, double t) const {
    const std::size_t n = h_->dim();
    check_evolve_args(psi, n, t);
    stats_ = {};
    if (t == 0.0) return psi;

    const auto& k = *k_;
    const int m_max = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg_.krylov_dim), n));
    std::vector<cplx> basis(static_cast<std::size_t>(m_max + 1) * n);
    auto vec = [&](int j) { return basis.data() + static_cast<std::size_t>(j) * n; };
    std::vector<cplx> v(psi.amplitudes().begin(), psi.amplitudes().end());

    // Below this beta the Krylov space is invariant to working precision.
    const double happy_tol = 1e-13 * std::max(1.0, h_->norm_bound());
    // coeff comes from an eigendecomposition of T_m, so |coeff(m-1)| never
    // drops much below machine epsilon; the estimate has a floor there.
    const double err_floor = 64.0 * std::numeric_limits<double>::epsilon();

    double remaining = t;
    double dt = cfg_.max_step > 0.0 ? std::min(t, cfg_.max_step) : t;
    double total_err = 0.0;

    while (remaining > 0.0) {
        const double beta0 = std::sqrt(k.norm_sq(n, v.data()));
        std::copy(v.begin(), v.end(), vec(0));
        k.scale(n, cplx{1.0 / beta0, 0.0}, vec(0));

        std::vector<double> alpha;
        std::vector<double> beta;  // beta[j] couples vec(j) and vec(j+1)
        bool happy = false;
        int m = 0;
        for (int j = 0; j < m_max; ++j) {
            cplx* w = vec(j + 1);
            h_->apply(vec(j), w, k);
            ++stats_.matvecs;
            double a = 0.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i <= j; ++i) {
                    const cplx c = k.dotc(n, vec(i), w);
                    k.axpy(n, -c, vec(i), w);
                    if (i == j) a += c.real();
                }
            }
            alpha.push_back(a);
            m = j + 1;
            const double b = std::sqrt(k.norm_sq(n, w));
            beta.push_back(b);
            if (b < happy_tol) {
                happy = true;
                break;
            }
            k.scale(n, cplx{1.0 / b, 0.0}, w);
        }

        Eigen::VectorXd diag(m);
        Eigen::VectorXd sub(std::max(m - 1, 0));
        for (int i = 0; i < m; ++i) diag(i) = alpha[static_cast<std::size_t>(i)];
        for (int i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        if (m == 1) {
            es.compute(Eigen::MatrixXd::Constant(1, 1, diag(0)));
        } else {
            es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        }
        const Eigen::MatrixXd& q = es.eigenvectors();
        const Eigen::VectorXd& theta = es.eigenvalues();
        const double beta_m = beta.back();

        if (happy) dt = remaining;
        Eigen::VectorXcd coeff(m);
        double step = 0.0;
        for (;;) {
            step = std::min(dt, remaining);
            for (int i = 0; i < m; ++i) {
                cplx s{};
                for (int l = 0; l < m; ++l) s += q(i, l) * std::polar(1.0, -theta(l) * step) * q(0, l);
                coeff(i) = s;
            }
            const double err = happy ? 0.0 : beta_m * std::abs(coeff(m - 1)) * beta0;
            const double allowed = std::max(cfg_.tolerance * step / t, err_floor * beta_m * beta0);
            if (err <= allowed) {
                total_err += err;
                const double grow = err > 0.0 ? 0.9 * std::pow(allowed / err, 1.0 / m) : 5.0;
                dt = step * std::clamp(grow, 1.0, 5.0);
                break;
            }
            ++stats_.rejected;
            dt = step * std::clamp(0.9 * std::pow(allowed / err, 1.0 / m), 0.1, 0.9);
            if (dt < t * 1e-12) {
                char msg[160];
                std::snprintf(msg, sizeof msg,
                              "Krylov step collapsed (dt=%.3g) with residual estimate %.3g above %.3g", dt, err,
                              allowed);
                throw KrylovBreakdown(msg, err);
            }
        }
        if (cfg_.max_step > 0.0) dt = std::min(dt, cfg_.max_step);

        std::fill(v.begin(), v.end(), cplx{});
        for (int i = 0; i < m; ++i) k.axpy(n, beta0 * coeff(i), vec(i), v.data());
        ++stats_.steps;
        remaining = step >= remaining ? 0.0 : remaining - step;
    }
    stats_.error_estimate = total_err;
    return StateVector(psi.n_spins(), std::move(v));
}

// ---------------------------------------------------------------------------

Propagator::Propagator(const Operator& h, const PropagatorConfig& cfg) {
    cfg.validate();
    if (cfg.method == PropagatorMethod::ExactEigendecomposition) {
        exact_ = std::make_unique<ExactPropagator>(h);
    } else {
        krylov_ = std::make_unique<KrylovPropagator>(h, cfg);
    }
}

StateVector Propagator::evolve(const StateVector& psi, double t) const {
    return exact_ ? exact_->evolve(psi, t) : krylov_->evolve(psi, t);
}

StateVector evolve(const StateVector& psi, const Operator& h, double t, const PropagatorConfig& cfg) {
    check_evolve_args(psi, h.dim(), t);
    if (t == 0.0) return psi;
    return Propagator(h, cfg).evolve(psi, t);
}

}  // namespace dwqst
