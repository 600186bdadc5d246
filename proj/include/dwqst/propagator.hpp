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

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "dwqst/pauli.hpp"
#include "dwqst/state.hpp"

namespace dwqst {

enum class PropagatorMethod { ExactEigendecomposition, Krylov };

std::string_view method_name(PropagatorMethod m);
/// Accepts "exact" / "exact-eigendecomposition" / "krylov".
PropagatorMethod parse_method(std::string_view name);

struct PropagatorConfig {
    PropagatorMethod method = PropagatorMethod::Krylov;
    int krylov_dim = 30;
    double tolerance = 1e-10;
    double max_step = 0.0;  // 0: no cap on the Krylov time step

    /// Throws std::invalid_argument.
    void validate() const;
};

/// Thrown when the adaptive Krylov step collapses without meeting the tolerance.
class KrylovBreakdown : public std::runtime_error {
public:
    KrylovBreakdown(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// e^{-iHt} via a cached dense eigendecomposition. Memory is O(dim^2).
class ExactPropagator {
public:
    explicit ExactPropagator(const Operator& h);

    StateVector evolve(const StateVector& psi, double t) const;
    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    bool real_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXd vecs_real_;
    Eigen::MatrixXcd vecs_complex_;
};

/// Lanczos propagator with full reorthogonalization and adaptive steps.
///
/// Per step the error is estimated as beta_m |[exp(-i T_m dt) e_1]_m| and kept
/// below tolerance * dt / t_total, so the whole call meets `tolerance`.
class KrylovPropagator {
public:
    struct Stats {
        int steps = 0;
        int rejected = 0;
        int matvecs = 0;
        double error_estimate = 0.0;
    };

    KrylovPropagator(const Operator& h, PropagatorConfig cfg);
    KrylovPropagator(const Operator& h, PropagatorConfig cfg, const simd::KernelTable& kernels);

    StateVector evolve(const StateVector& psi, double t) const;
    const Stats& last_stats() const { return stats_; }

private:
    const Operator* h_;
    PropagatorConfig cfg_;
    const simd::KernelTable* k_;
    mutable Stats stats_;
};

/// Either propagator behind one interface. Holds a reference to `h`.
class Propagator {
public:
    Propagator(const Operator& h, const PropagatorConfig& cfg);
    StateVector evolve(const StateVector& psi, double t) const;

private:
    std::unique_ptr<ExactPropagator> exact_;
    std::unique_ptr<KrylovPropagator> krylov_;
};

/// One-shot e^{-iHt}|psi>. t must be >= 0; t == 0 returns psi unchanged.
StateVector evolve(const StateVector& psi, const Operator& h, double t, const PropagatorConfig& cfg);

}  // namespace dwqst
