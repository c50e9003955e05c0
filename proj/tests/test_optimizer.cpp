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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/linalg.hpp"
#include "decoq/optimizer.hpp"
#include "decoq/rng.hpp"
#include "decoq/states.hpp"

using namespace decoq;

TEST_SUITE_BEGIN("optimizer");

TEST_CASE("config validation") {
    const NoiseChannel pd(ChannelKind::PhaseDamping, 0.2);

    SearchConfig bad_n{1, pd};
    CHECK_THROWS_AS(search(bad_n), std::invalid_argument);

    SearchConfig cfg{2, pd};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);

    cfg = SearchConfig{2, pd};
    cfg.step_decay = 1.0;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);
    cfg.step_decay = 0.0;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);

    cfg = SearchConfig{2, pd};
    cfg.min_step = cfg.initial_step;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);

    cfg = SearchConfig{2, pd};
    cfg.patience = 0;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);

    cfg = SearchConfig{2, pd};
    cfg.restarts = 0;
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);

    cfg = SearchConfig{3, pd};
    cfg.lu_base = make_ghz(2);  // register size disagrees
    CHECK_THROWS_AS(search(cfg), std::invalid_argument);
}

TEST_CASE("score endpoints have closed forms") {
    // Full depolarizing sends everything to the maximally mixed state.
    const NoiseChannel dep1(ChannelKind::Depolarizing, 1.0);
    CHECK(score(make_ghz(3), dep1) == doctest::Approx(0.0).epsilon(1e-12));

    // Noiseless phase damping preserves the initial profile.
    const NoiseChannel pd0(ChannelKind::PhaseDamping, 0.0);
    CHECK(score(make_ghz(4), pd0) == doctest::Approx(0.5).epsilon(1e-10));

    // A product state scores zero under any channel.
    std::vector<complexd> product(4, complexd{0.0, 0.0});
    product[0] = complexd{1.0, 0.0};
    const NoiseChannel pd(ChannelKind::PhaseDamping, 0.3);
    CHECK(score(PureState(2, std::move(product)), pd) == doctest::Approx(0.0).epsilon(1e-12));

    // Bell under phase damping: coherence scales by (1-p), negativity (1-p)/2.
    for (double p : {0.0, 0.3, 0.7}) {
        CHECK(score(make_ghz(2), NoiseChannel(ChannelKind::PhaseDamping, p)) ==
              doctest::Approx((1.0 - p) / 2.0).epsilon(1e-10));
    }
}

TEST_CASE("perturb renormalizes and is seed-deterministic") {
    const PureState base = make_w(3);

    Rng rng_a(7), rng_b(7);
    const PureState pa = perturb(base, 0.1, rng_a);
    const PureState pb = perturb(base, 0.1, rng_b);
    CHECK(pa.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < pa.dim(); ++i) {
        CHECK(pa.amplitude(i).real() == pb.amplitude(i).real());
        CHECK(pa.amplitude(i).imag() == pb.amplitude(i).imag());
    }

    // A tiny step stays near the base state; a large step moves it.
    Rng rng_c(11);
    const PureState tiny = perturb(base, 1e-9, rng_c);
    CHECK(std::abs(tiny.fidelity(base)) == doctest::Approx(1.0).epsilon(1e-12));
    Rng rng_d(11);
    const PureState big = perturb(base, 0.5, rng_d);
    CHECK(std::abs(big.fidelity(base)) < 1.0 - 1e-6);
}

namespace {

SearchConfig small_config(int n, ChannelKind kind, double p) {
    SearchConfig cfg{n, NoiseChannel(kind, p)};
    cfg.max_iters = 800;
    cfg.patience = 40;
    cfg.restarts = 2;
    cfg.seed = 5;
    return cfg;
}

}  // namespace

TEST_CASE("search is deterministic for a fixed config") {
    const SearchConfig cfg = small_config(2, ChannelKind::PhaseDamping, 0.3);
    const SearchResult a = search(cfg);
    const SearchResult b = search(cfg);

    CHECK(a.evolved_score == b.evolved_score);
    CHECK(a.initial_score == b.initial_score);
    CHECK(a.restart_index == b.restart_index);
    REQUIRE(a.trajectory.size() == b.trajectory.size());
    for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
        CHECK(a.trajectory[i].first == b.trajectory[i].first);
        CHECK(a.trajectory[i].second == b.trajectory[i].second);
    }
    for (int i = 0; i < a.best_state.dim(); ++i) {
        CHECK(a.best_state.amplitude(i).real() == b.best_state.amplitude(i).real());
        CHECK(a.best_state.amplitude(i).imag() == b.best_state.amplitude(i).imag());
    }
}

TEST_CASE("trajectory starts at iteration zero and strictly improves") {
    const SearchConfig cfg = small_config(2, ChannelKind::BitFlip, 0.2);
    const SearchResult result = search(cfg);

    REQUIRE(!result.trajectory.empty());
    CHECK(result.trajectory.front().first == 0);
    for (std::size_t i = 1; i < result.trajectory.size(); ++i) {
        CHECK(result.trajectory[i].first > result.trajectory[i - 1].first);
        CHECK(result.trajectory[i].second > result.trajectory[i - 1].second);
    }
    CHECK(result.trajectory.back().second == result.evolved_score);

    // The reported scores are reproducible from the reported state.
    CHECK(score(result.best_state, cfg.channel) ==
          doctest::Approx(result.evolved_score).epsilon(1e-10));
    const EntanglementProfile initial =
        entanglement_profile(DensityMatrix::from_pure(result.best_state));
    CHECK(initial.global == doctest::Approx(result.initial_score).epsilon(1e-10));
    CHECK(0 <= result.restart_index);
    CHECK(result.restart_index < cfg.restarts);
}

TEST_CASE("two-qubit search approaches the Bell optimum") {
    // Under phase damping the Bell state is optimal; its evolved negativity
    // at p = 0.3 is 0.35. A modest search should get close from scratch.
    SearchConfig cfg{2, NoiseChannel(ChannelKind::PhaseDamping, 0.3)};
    cfg.max_iters = 6000;
    cfg.restarts = 4;
    cfg.seed = 1;
    const SearchResult result = search(cfg);
    CHECK(result.evolved_score >= 0.35 - 1e-3);
    CHECK(result.evolved_score <= 0.35 + 1e-9);
}

TEST_CASE("lu-restricted search stays on the base orbit") {
    // At p = 0 every local-unitary image of the Bell state scores exactly
    // the Bell negativity, so the search result must sit on that plateau.
    SearchConfig cfg{2, NoiseChannel(ChannelKind::PhaseDamping, 0.0)};
    cfg.lu_base = make_ghz(2);
    cfg.max_iters = 400;
    cfg.patience = 40;
    cfg.restarts = 2;
    cfg.seed = 3;
    const SearchResult result = search(cfg);
    CHECK(result.evolved_score == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(result.initial_score == doctest::Approx(0.5).epsilon(1e-9));

    const SearchResult again = search(cfg);
    CHECK(again.evolved_score == result.evolved_score);
    CHECK(again.restart_index == result.restart_index);
}

TEST_CASE("lu-restricted search improves a rotated ghz under depolarizing") {
    // Depolarizing is covariant under local unitaries, so the whole orbit
    // scores identically; the search must report that flat value.
    SearchConfig cfg{3, NoiseChannel(ChannelKind::Depolarizing, 0.2)};
    cfg.lu_base = make_ghz(3);
    cfg.max_iters = 300;
    cfg.patience = 30;
    cfg.restarts = 2;
    cfg.seed = 9;
    const SearchResult result = search(cfg);
    CHECK(result.evolved_score ==
          doctest::Approx(score(make_ghz(3), cfg.channel)).epsilon(1e-8));
}

TEST_SUITE_END();
