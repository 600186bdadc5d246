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

#include <algorithm>
#include <random>
#include <vector>

#include "dwqst/simd/kernels.hpp"

using dwqst::simd::cplx;
namespace simd = dwqst::simd;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

struct RandomCsr {
    std::vector<std::uint32_t> row_ptr{0};
    std::vector<std::uint32_t> col;
    std::vector<cplx> val;
    simd::CsrView view(std::size_t rows) const { return {rows, row_ptr, col, val}; }
};

RandomCsr random_csr(std::size_t rows, std::mt19937_64& rng) {
    RandomCsr m;
    std::uniform_int_distribution<int> per_row(0, 9);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(rows - 1));
    std::normal_distribution<double> g;
    for (std::size_t r = 0; r < rows; ++r) {
        const int k = per_row(rng);
        for (int j = 0; j < k; ++j) {
            m.col.push_back(pick(rng));
            m.val.emplace_back(g(rng), g(rng));
        }
        m.row_ptr.push_back(static_cast<std::uint32_t>(m.col.size()));
    }
    return m;
}

}  // namespace

TEST_CASE("scalar kernels are always available and active() resolves") {
    const auto isas = simd::available();
    REQUIRE(!isas.empty());
    CHECK(isas.front() == simd::Isa::Scalar);
    CHECK(simd::scalar_kernels().isa == simd::Isa::Scalar);
    const auto& a = simd::active();
    CHECK(std::find(isas.begin(), isas.end(), a.isa) != isas.end());
    CHECK(!simd::isa_name(a.isa).empty());
}

TEST_CASE("every variant matches the scalar reference") {
    std::mt19937_64 rng(7);
    const auto& ref = simd::scalar_kernels();
    for (auto isa : simd::available()) {
        const auto& k = simd::kernels_for(isa);
        CAPTURE(simd::isa_name(isa));
        // Odd lengths exercise the vector tails.
        for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 1023u}) {
            CAPTURE(n);
            const auto x = random_vector(n, rng);
            const auto y0 = random_vector(n, rng);
            const cplx alpha{0.3, -1.7};

            auto y1 = y0, y2 = y0;
            ref.axpy(n, alpha, x.data(), y1.data());
            k.axpy(n, alpha, x.data(), y2.data());
            CHECK(max_diff(y1, y2) <= 1e-14);

            const cplx d1 = ref.dotc(n, x.data(), y0.data());
            const cplx d2 = k.dotc(n, x.data(), y0.data());
            CHECK(std::abs(d1 - d2) <= 1e-12 * (1.0 + std::abs(d1)));

            const double n1 = ref.norm_sq(n, x.data());
            const double n2 = k.norm_sq(n, x.data());
            CHECK(std::abs(n1 - n2) <= 1e-12 * n1);

            auto s1 = x, s2 = x;
            ref.scale(n, alpha, s1.data());
            k.scale(n, alpha, s2.data());
            CHECK(max_diff(s1, s2) <= 1e-14);

            auto c1 = x, c2 = x;
            ref.cmul(n, y0.data(), c1.data());
            k.cmul(n, y0.data(), c2.data());
            CHECK(max_diff(c1, c2) <= 1e-13);

            const auto m = random_csr(n, rng);
            std::vector<cplx> z1(n), z2(n);
            ref.spmv(m.view(n), x.data(), z1.data());
            k.spmv(m.view(n), x.data(), z2.data());
            CHECK(max_diff(z1, z2) <= 1e-12);
        }
    }
}

TEST_CASE("dotc conjugates its first argument") {
    const std::vector<cplx> x{{0.0, 1.0}};
    const std::vector<cplx> y{{0.0, 1.0}};
    for (auto isa : simd::available()) {
        const cplx d = simd::kernels_for(isa).dotc(1, x.data(), y.data());
        CHECK(d.real() == doctest::Approx(1.0));
        CHECK(d.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("unknown variant is rejected") {
    const auto isas = simd::available();
    for (auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
        if (std::find(isas.begin(), isas.end(), isa) == isas.end()) {
            CHECK_THROWS_AS(simd::kernels_for(isa), std::invalid_argument);
        }
    }
}
