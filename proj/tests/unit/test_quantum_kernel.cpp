// Copyright 2026 The tascope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catch_amalgamated.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tascope/errors.hpp"
#include "tascope/quantum_kernel.hpp"

using namespace tascope;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

TEST_CASE("encode_point prepares H RZ H |0>", "[kernel]") {
    SECTION("x = 0 leaves |0>") {
        const auto psi = encode_point(0.0, 17.3);
        CHECK_THAT(std::norm(psi.a0), WithinAbs(1.0, 1e-15));
        CHECK_THAT(std::norm(psi.a1), WithinAbs(0.0, 1e-15));
    }
    SECTION("gamma x = pi flips to |1>") {
        // a0 = cos(theta/2), a1 = -i sin(theta/2) by hand.
        const auto psi = encode_point(0.5, 2.0 * pi);
        CHECK_THAT(std::norm(psi.a1), WithinAbs(1.0, 1e-15));
        CHECK_THAT(psi.a1.imag(), WithinAbs(-1.0, 1e-15));
    }
    SECTION("gamma x = pi/2 is an equal superposition") {
        const auto psi = encode_point(1.0, pi / 2.0);
        CHECK_THAT(std::norm(psi.a0), WithinAbs(0.5, 1e-15));
        CHECK_THAT(std::norm(psi.a1), WithinAbs(0.5, 1e-15));
    }
    SECTION("norm is preserved") {
        std::mt19937_64 gen(7);
        std::uniform_real_distribution<double> u(-50.0, 50.0);
        for (int i = 0; i < 200; ++i) {
            CHECK_THAT(encode_point(u(gen), u(gen)).norm_squared(), WithinAbs(1.0, 1e-12));
        }
    }
    SECTION("non-finite input") {
        CHECK_THROWS_AS(encode_point(std::numeric_limits<double>::quiet_NaN(), 1.0),
                        DomainError);
        CHECK_THROWS_AS(encode_point(0.1, std::numeric_limits<double>::infinity()),
                        DomainError);
    }
}

TEST_CASE("gates are unitary", "[kernel]") {
    for (const Gate2 &g : {gates::hadamard(), gates::rz(0.37), gates::rz(-5.1)}) {
        // G^dagger G = I
        const Complex m00 = std::conj(g[0]) * g[0] + std::conj(g[2]) * g[2];
        const Complex m01 = std::conj(g[0]) * g[1] + std::conj(g[2]) * g[3];
        const Complex m11 = std::conj(g[1]) * g[1] + std::conj(g[3]) * g[3];
        CHECK_THAT(std::abs(m00 - 1.0), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(m01), WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(m11 - 1.0), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("closed-form kernel entries", "[kernel]") {
    CHECK(kernel_entry_closed_form(0.4, 0.4, 9.0) == 1.0);
    CHECK_THAT(kernel_entry_closed_form(0.0, 1.0, pi), WithinAbs(0.0, 1e-30));
    CHECK_THAT(kernel_entry_closed_form(0.0, 1.0 / 3.0, 3.0 * pi), WithinAbs(0.0, 1e-30));
    CHECK(kernel_entry_closed_form(0.2, 0.9, 4.0) == kernel_entry_closed_form(0.9, 0.2, 4.0));
    CHECK_THROWS_AS(kernel_entry_closed_form(0.0, 1.0, std::nan("")), DomainError);
}

TEST_CASE("statevector kernel entries", "[kernel]") {
    CHECK_THAT(kernel_entry_statevector(0.7, 0.7, 2.3), WithinAbs(1.0, 1e-12));
    CHECK_THAT(kernel_entry_statevector(0.0, 1.0, pi), WithinAbs(0.0, 1e-12));
}

TEST_CASE("statevector simulation matches the closed form", "[kernel][property]") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> x(0.0, 1.0);
    std::uniform_real_distribution<double> g(-100.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double xi = x(gen);
        const double xj = x(gen);
        const double gamma = g(gen);
        REQUIRE_THAT(kernel_entry_statevector(xi, xj, gamma),
                     WithinAbs(kernel_entry_closed_form(xi, xj, gamma), 1e-12));
    }
}

TEST_CASE("fidelity ignores global phase", "[kernel][property]") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (int i = 0; i < 100; ++i) {
        const auto a = encode_point(0.3, u(gen));
        const auto b = encode_point(0.8, u(gen));
        const Complex phase = std::polar(1.0, u(gen));
        const Statevector2 shifted{phase * b.a0, phase * b.a1};
        CHECK_THAT(fidelity(a, shifted), WithinAbs(fidelity(a, b), 1e-14));
    }
}

TEST_CASE("single entries are periodic in gamma", "[kernel][property]") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> x(0.0, 1.0);
    std::uniform_real_distribution<double> g(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double xi = x(gen);
        const double xj = x(gen);
        if (std::fabs(xi - xj) < 1e-3) {
            continue;
        }
        const double gamma = g(gen);
        CHECK_THAT(kernel_entry_closed_form(xi, xj, gamma + 2.0 * pi / (xi - xj)),
                   WithinAbs(kernel_entry_closed_form(xi, xj, gamma), 1e-9));
    }
}

TEST_CASE("kernel_matrix", "[kernel]") {
    SECTION("toy N = 2 at gamma = pi is the identity") {
        for (auto method : {KernelMethod::closed_form, KernelMethod::statevector}) {
            const auto k = kernel_matrix(build_toy_dataset({2}), FeatureMapParams::uniform(pi),
                                         method);
            CHECK_THAT(k(0, 0), WithinAbs(1.0, 1e-12));
            CHECK_THAT(k(1, 1), WithinAbs(1.0, 1e-12));
            CHECK_THAT(k(0, 1), WithinAbs(0.0, 1e-12));
        }
    }
    SECTION("toy N = 4 at gamma = 3 pi separates the classes") {
        for (auto method : {KernelMethod::closed_form, KernelMethod::statevector}) {
            const auto k =
                kernel_matrix(build_toy_dataset({4}), FeatureMapParams::uniform(3 * pi), method);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    CHECK_THAT(k(i, j), WithinAbs((i + j) % 2 == 0 ? 1.0 : 0.0, 1e-12));
                }
            }
        }
    }
    SECTION("product rule for two features") {
        LabeledDataset d;
        d.dimension = 2;
        d.features = {0.0, 0.0, 1.0, 1.0};
        d.labels = {+1, -1};
        for (auto method : {KernelMethod::closed_form, KernelMethod::statevector}) {
            const auto k = kernel_matrix(d, FeatureMapParams{{pi, pi}}, method);
            CHECK_THAT(k(0, 1), WithinAbs(0.0, 1e-12));
        }
        const auto k = kernel_matrix(d, FeatureMapParams{{1.1, 2.7}});
        CHECK_THAT(k(0, 1), WithinAbs(kernel_entry_closed_form(0.0, 1.0, 1.1) *
                                          kernel_entry_closed_form(0.0, 1.0, 2.7),
                                      1e-15));
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(kernel_matrix(build_toy_dataset({4}), FeatureMapParams{{1.0, 2.0}}),
                        ConfigurationError);
    }
}

TEST_CASE("kernel matrices are symmetric with unit diagonal", "[kernel][property]") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> x(0.0, 1.0);
    std::uniform_real_distribution<double> g(-30.0, 30.0);
    for (int trial = 0; trial < 20; ++trial) {
        LabeledDataset d;
        for (int i = 0; i < 12; ++i) {
            d.features.push_back(x(gen));
            d.labels.push_back(i % 2 == 0 ? 1 : -1);
        }
        const double gamma = g(gen);
        const auto closed = kernel_matrix(d, FeatureMapParams::uniform(gamma));
        const auto sim =
            kernel_matrix(d, FeatureMapParams::uniform(gamma), KernelMethod::statevector);
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(closed(i, i) == 1.0);
            CHECK_THAT(sim(i, i), WithinAbs(1.0, 1e-12));
            for (std::size_t j = 0; j < d.size(); ++j) {
                CHECK(closed(i, j) == closed(j, i));
                CHECK(sim(i, j) == sim(j, i));
                CHECK(closed(i, j) >= 0.0);
                CHECK(closed(i, j) <= 1.0);
                CHECK_THAT(sim(i, j), WithinAbs(closed(i, j), 1e-12));
            }
        }
    }
}

TEST_CASE("kernel method names", "[kernel]") {
    CHECK(parse_kernel_method("closed") == KernelMethod::closed_form);
    CHECK(parse_kernel_method("statevector") == KernelMethod::statevector);
    CHECK(parse_kernel_method(to_string(KernelMethod::statevector)) ==
          KernelMethod::statevector);
    CHECK_THROWS_AS(parse_kernel_method("shots"), ConfigurationError);
}
