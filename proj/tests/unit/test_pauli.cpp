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

#include <Eigen/Dense>

#include "dwqst/hamiltonians.hpp"
#include "dwqst/pauli.hpp"

using namespace dwqst;

TEST_CASE("realize single-site and two-site Z") {
    PauliSum z(1);
    z.add(1.0, {{1, Pauli::Z}});
    const auto m = realize(z).to_dense();
    CHECK(m(0, 0) == cplx(1.0));
    CHECK(m(1, 1) == cplx(-1.0));
    CHECK(m(0, 1) == cplx(0.0));

    PauliSum zz(2);
    zz.add(1.0, {{1, Pauli::Z}, {2, Pauli::Z}});
    const auto d = realize(zz).diagonal();
    CHECK(d == std::vector<double>{1.0, -1.0, -1.0, 1.0});
}

TEST_CASE("empty sum realizes to zero") {
    const auto op = realize(PauliSum(3));
    CHECK(op.nnz() == 0);
    CHECK(op.to_dense().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Pauli matrices and Y = iXZ") {
    PauliSum x(1), y(1);
    x.add(1.0, {{1, Pauli::X}});
    y.add(1.0, {{1, Pauli::Y}});
    const auto mx = realize(x).to_dense();
    const auto my = realize(y).to_dense();
    CHECK(mx(0, 1) == cplx(1.0));
    CHECK(mx(1, 0) == cplx(1.0));
    CHECK(my(0, 1) == cplx(0.0, -1.0));
    CHECK(my(1, 0) == cplx(0.0, 1.0));
    CHECK_FALSE(realize(y).is_real());
    CHECK(realize(x).is_real());
}

TEST_CASE("site 1 is the most significant qubit") {
    PauliSum x1(3);
    x1.add(1.0, {{1, Pauli::X}});
    const auto m = realize(x1).to_dense();
    CHECK(m(0, 4) == cplx(1.0));
    CHECK(m(4, 0) == cplx(1.0));
}

TEST_CASE("kron oracle for random Pauli strings") {
    const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd X, Y, Z;
    X << 0, 1, 1, 0;
    Y << 0, cplx(0, -1), cplx(0, 1), 0;
    Z << 1, 0, 0, -1;
    auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
        return out;
    };
    const int n = 4;
    PauliSum sum(n);
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(16, 16);
    unsigned seed = 12345;
    for (int term = 0; term < 12; ++term) {
        std::map<int, Pauli> f;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
        for (int s = 1; s <= n; ++s) {
            seed = seed * 1103515245u + 12345u;
            const int p = (seed >> 16) % 4;
            if (p == 0) {
                m = kron(m, I);
                continue;
            }
            const Pauli pp = p == 1 ? Pauli::X : (p == 2 ? Pauli::Y : Pauli::Z);
            f[s] = pp;
            m = kron(m, p == 1 ? X : (p == 2 ? Y : Z));
        }
        const double c = 0.1 * (term + 1);
        sum.add(c, f);
        expect += c * m;
    }
    const auto got = realize(sum).to_dense();
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(realize(sum).hermiticity_defect() < 1e-14);
}

TEST_CASE("add rejects bad sites") {
    PauliSum p(2);
    CHECK_THROWS_AS(p.add(1.0, {{0, Pauli::X}}), std::out_of_range);
    CHECK_THROWS_AS(p.add(1.0, {{3, Pauli::X}}), std::out_of_range);
}

TEST_CASE("cancelling terms are merged away") {
    PauliSum p(2);
    p.add(0.5, {{1, Pauli::X}, {2, Pauli::X}});
    p.add(-0.5, {{1, Pauli::X}, {2, Pauli::X}});
    CHECK(realize(p).nnz() == 0);
}

TEST_CASE("reflected reverses the sites") {
    PauliSum a(3), b(3);
    a.add(0.7, {{1, Pauli::X}});
    a.add(0.2, {{1, Pauli::Z}, {2, Pauli::Z}});
    b.add(0.7, {{3, Pauli::X}});
    b.add(0.2, {{3, Pauli::Z}, {2, Pauli::Z}});
    CHECK((realize(a).reflected().to_dense() - realize(b).to_dense()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("norm bound dominates the spectral radius") {
    const auto h = realize(heisenberg_xy(5, 1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_dense());
    CHECK(es.eigenvalues().cwiseAbs().maxCoeff() <= h.norm_bound() + 1e-12);
}

TEST_CASE("commutator with total Z") {
    PauliSum x(2);
    x.add(1.0, {{1, Pauli::X}});
    CHECK(commutator_max_norm(realize(x), total_z(2)) == doctest::Approx(2.0));
    CHECK(commutator_max_norm(total_z(3), total_z(3)) == 0.0);
}

TEST_CASE("to_string") {
    PauliSum p(2);
    p.add(0.5, {{1, Pauli::X}, {2, Pauli::X}});
    CHECK(p.to_string().find("X1 X2") != std::string::npos);
}
