// Copyright 2026 The decoq Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/linalg.hpp"
#include "decoq/rng.hpp"
#include "decoq/states.hpp"
#include "support.hpp"

using namespace decoq;
using decoq::testing::brute_force_apply_all;
using decoq::testing::depolarizing_white_noise_map;
using decoq::testing::random_density_matrix;

namespace {

const std::vector<ChannelKind> kAllKinds{
    ChannelKind::PhaseDamping, ChannelKind::Depolarizing, ChannelKind::BitFlip,
    ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip,
};

ComplexMatrix kraus_completeness_sum(const NoiseChannel& ch) {
    ComplexMatrix sum(2);
    for (const ComplexMatrix& e : kraus_operators(ch)) sum += e.adjoint() * e;
    return sum;
}

}  // namespace

TEST_SUITE_BEGIN("channels");

TEST_CASE("names round trip") {
    for (ChannelKind kind : kAllKinds) {
        CHECK(channel_kind_from_string(to_string(kind)) == kind);
    }
    CHECK(to_string(ChannelKind::PhaseDamping) == "pd");
    CHECK(to_string(ChannelKind::Depolarizing) == "dep");
    CHECK(to_string(ChannelKind::BitFlip) == "bf");
    CHECK(to_string(ChannelKind::PhaseFlip) == "pf");
    CHECK(to_string(ChannelKind::BitPhaseFlip) == "bpf");
    CHECK_THROWS_AS(channel_kind_from_string("amplitude"), std::invalid_argument);
}

TEST_CASE("strength validation") {
    CHECK_THROWS_AS(NoiseChannel(ChannelKind::BitFlip, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(NoiseChannel(ChannelKind::BitFlip, 1.01), std::invalid_argument);
    CHECK_NOTHROW(NoiseChannel(ChannelKind::BitFlip, 0.0));
    CHECK_NOTHROW(NoiseChannel(ChannelKind::BitFlip, 1.0));
}

TEST_CASE("kraus completeness across kinds and strengths") {
    for (ChannelKind kind : kAllKinds) {
        for (double p = 0.0; p <= 1.0; p += 0.1) {
            const ComplexMatrix sum = kraus_completeness_sum(NoiseChannel(kind, std::min(p, 1.0)));
            CHECK(sum.max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
        }
    }
}

TEST_CASE("kraus operators match closed forms") {
    SUBCASE("p=0 leaves only the identity") {
        for (ChannelKind kind : kAllKinds) {
            const std::vector<ComplexMatrix> ops = kraus_operators(NoiseChannel(kind, 0.0));
            CHECK(ops.front().max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
            for (std::size_t j = 1; j < ops.size(); ++j) {
                CHECK(ops[j].frobenius_norm() == 0.0);
            }
        }
    }

    SUBCASE("phase damping endpoints") {
        const std::vector<ComplexMatrix> ops =
            kraus_operators(NoiseChannel(ChannelKind::PhaseDamping, 1.0));
        REQUIRE(ops.size() == 2);
        ComplexMatrix e0(2), e1(2);
        e0(0, 0) = 1.0;
        e1(1, 1) = 1.0;
        CHECK(ops[0].max_abs_diff(e0) == 0.0);
        CHECK(ops[1].max_abs_diff(e1) == 0.0);
    }

    SUBCASE("bit flip at p=1 is the even mixture") {
        const std::vector<ComplexMatrix> ops =
            kraus_operators(NoiseChannel(ChannelKind::BitFlip, 1.0));
        REQUIRE(ops.size() == 2);
        const double a = std::sqrt(0.5);
        CHECK(ops[0].max_abs_diff(a * ComplexMatrix::identity(2)) < 1e-15);
        CHECK(ops[1].max_abs_diff(a * pauli_x()) < 1e-15);
    }

    SUBCASE("flip family uses the advertised Pauli") {
        const double p = 0.4;
        const double s = std::sqrt(p / 2.0);
        CHECK(kraus_operators(NoiseChannel(ChannelKind::BitFlip, p))[1].max_abs_diff(
                  s * pauli_x()) < 1e-15);
        CHECK(kraus_operators(NoiseChannel(ChannelKind::PhaseFlip, p))[1].max_abs_diff(
                  s * pauli_z()) < 1e-15);
        CHECK(kraus_operators(NoiseChannel(ChannelKind::BitPhaseFlip, p))[1].max_abs_diff(
                  s * pauli_y()) < 1e-15);
    }
}

TEST_CASE("apply_single on one qubit") {
    SUBCASE("phase damping scales coherences by sqrt(1-p)") {
        const double a = 1.0 / std::numbers::sqrt2;
        const DensityMatrix plus = DensityMatrix::from_pure(PureState(1, {a, a}));
        for (double p : {0.0, 0.3, 0.7, 1.0}) {
            const DensityMatrix out =
                apply_single(NoiseChannel(ChannelKind::PhaseDamping, p), plus, 0);
            CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
            CHECK(out.matrix()(0, 1).real() ==
                  doctest::Approx(0.5 * std::sqrt(1.0 - p)).epsilon(1e-14));
        }
        const DensityMatrix dead =
            apply_single(NoiseChannel(ChannelKind::PhaseDamping, 1.0), plus, 0);
        CHECK(dead.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()) < 1e-15);
    }

    SUBCASE("depolarizing at p=1 lands on I/2") {
        Rng rng(5);
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_density_matrix(1, rng);
            const DensityMatrix out =
                apply_single(NoiseChannel(ChannelKind::Depolarizing, 1.0), rho, 0);
            CHECK(out.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()) < 1e-12);
        }
    }

    SUBCASE("bit flip mixes populations") {
        ComplexMatrix ground(2);
        ground(0, 0) = 1.0;
        const DensityMatrix rho(1, ground);
        for (double p : {0.0, 0.2, 0.5, 1.0}) {
            const DensityMatrix out = apply_single(NoiseChannel(ChannelKind::BitFlip, p), rho, 0);
            CHECK(out.matrix()(0, 0).real() == doctest::Approx(1.0 - p / 2.0).epsilon(1e-14));
            CHECK(out.matrix()(1, 1).real() == doctest::Approx(p / 2.0).epsilon(1e-14));
        }
    }

    SUBCASE("qubit index validated") {
        const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
        CHECK_THROWS_AS(apply_single(NoiseChannel(ChannelKind::BitFlip, 0.5), rho, 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(apply_single(NoiseChannel(ChannelKind::BitFlip, 0.5), rho, -1),
                        std::invalid_argument);
    }

    SUBCASE("targets only the named qubit") {
        // Phase damping on qubit 1 of |0>|+> must not touch qubit 0.
        const double a = 1.0 / std::numbers::sqrt2;
        const DensityMatrix rho = DensityMatrix::from_pure(PureState(2, {a, a, 0.0, 0.0}));
        const DensityMatrix out =
            apply_single(NoiseChannel(ChannelKind::PhaseDamping, 1.0), rho, 1);
        ComplexMatrix expected(4);
        expected(0, 0) = 0.5;
        expected(1, 1) = 0.5;
        CHECK(out.matrix().max_abs_diff(expected) < 1e-14);
    }
}

TEST_CASE("apply_all equals the explicit tensor sum for small registers") {
    Rng rng(17);
    for (int n : {1, 2, 3}) {
        const DensityMatrix rho = random_density_matrix(n, rng);
        for (ChannelKind kind : kAllKinds) {
            const NoiseChannel ch(kind, 0.35);
            const DensityMatrix fast = apply_all(ch, rho);
            const ComplexMatrix slow = brute_force_apply_all(ch, rho);
            CHECK(fast.matrix().max_abs_diff(slow) < 1e-12);
        }
    }
}

TEST_CASE("apply_all basic behavior") {
    SUBCASE("p=0 is the identity channel") {
        Rng rng(31);
        const DensityMatrix rho = random_density_matrix(3, rng);
        for (ChannelKind kind : kAllKinds) {
            const DensityMatrix out = apply_all(NoiseChannel(kind, 0.0), rho);
            CHECK(out.matrix().max_abs_diff(rho.matrix()) <= 1e-14);
        }
    }

    SUBCASE("depolarizing at p=1 fully mixes ghz3") {
        const DensityMatrix ghz = DensityMatrix::from_pure(make_ghz(3));
        const DensityMatrix out = apply_all(NoiseChannel(ChannelKind::Depolarizing, 1.0), ghz);
        CHECK(out.matrix().max_abs_diff(DensityMatrix::maximally_mixed(3).matrix()) < 1e-12);
    }

    SUBCASE("phase damping scales the ghz corner coherence") {
        for (int n : {2, 3, 4}) {
            const DensityMatrix ghz = DensityMatrix::from_pure(make_ghz(n));
            for (double p : {0.1, 0.5, 0.9}) {
                const DensityMatrix out =
                    apply_all(NoiseChannel(ChannelKind::PhaseDamping, p), ghz);
                const double expected = 0.5 * std::pow(1.0 - p, n / 2.0);
                CHECK(out.matrix()(0, (1 << n) - 1).real() ==
                      doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }

    SUBCASE("trace preserved across the strength grid") {
        Rng rng(37);
        const DensityMatrix rho = random_density_matrix(3, rng);
        for (ChannelKind kind : kAllKinds) {
            for (int i = 0; i <= 10; ++i) {
                const DensityMatrix out = apply_all(NoiseChannel(kind, i / 10.0), rho);
                CHECK(std::abs(out.matrix().trace() - complexd{1.0, 0.0}) < 1e-12);
            }
        }
    }

    SUBCASE("output stays positive semidefinite") {
        Rng rng(41);
        for (ChannelKind kind : kAllKinds) {
            for (int trial = 0; trial < 20; ++trial) {
                const DensityMatrix rho = random_density_matrix(2, rng);
                const DensityMatrix out = apply_all(NoiseChannel(kind, rng.uniform()), rho);
                CHECK(out.min_eigenvalue() > -1e-10);
            }
        }
    }
}

TEST_CASE("qubit application order does not matter") {
    Rng rng(43);
    const int n = 3;
    const DensityMatrix rho = random_density_matrix(n, rng);
    const std::vector<std::vector<int>> orders{{0, 1, 2}, {2, 1, 0}, {1, 2, 0}};
    for (ChannelKind kind : kAllKinds) {
        const NoiseChannel ch(kind, 0.45);
        std::vector<ComplexMatrix> results;
        for (const std::vector<int>& order : orders) {
            DensityMatrix out = rho;
            for (int q : order) out = apply_single(ch, out, q);
            results.push_back(out.matrix());
        }
        CHECK(results[0].max_abs_diff(results[1]) < 1e-12);
        CHECK(results[0].max_abs_diff(results[2]) < 1e-12);
    }
}

TEST_CASE("depolarizing matches the white-noise map") {
    // This equality pins the p' = 3p/4 internal parameter: the Kraus path
    // must reproduce rho -> p/2 I (x) tr_q rho + (1-p) rho on every qubit.
    Rng rng(47);
    for (int n : {1, 2, 3}) {
        const DensityMatrix rho = random_density_matrix(n, rng);
        for (double p : {0.0, 0.25, 0.604, 1.0}) {
            const DensityMatrix kraus_path = apply_all(NoiseChannel(ChannelKind::Depolarizing, p), rho);
            const ComplexMatrix map_path = depolarizing_white_noise_map(rho, p);
            CHECK(kraus_path.matrix().max_abs_diff(map_path) < 1e-12);
        }
    }
}

TEST_CASE("depolarizing commutes with local unitaries") {
    Rng rng(53);
    const int n = 3;
    const PureState psi = haar_random_state(n, rng);
    std::vector<ComplexMatrix> us;
    for (int q = 0; q < n; ++q) us.push_back(rng.haar_unitary2());
    const PureState rotated = apply_local_unitaries(psi, us);

    const NoiseChannel dep(ChannelKind::Depolarizing, 0.3);
    const DensityMatrix evolved_rotated = apply_all(dep, DensityMatrix::from_pure(rotated));

    // Rotate after evolving instead: U acts by conjugation on the output.
    const DensityMatrix evolved = apply_all(dep, DensityMatrix::from_pure(psi));
    ComplexMatrix u = us[0];
    for (int q = 1; q < n; ++q) u = tensor_product(u, us[static_cast<std::size_t>(q)]);
    const ComplexMatrix rotated_evolved = u * evolved.matrix() * u.adjoint();

    CHECK(evolved_rotated.matrix().max_abs_diff(rotated_evolved) < 1e-10);
}

TEST_SUITE_END();
