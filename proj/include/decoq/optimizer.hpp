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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/linalg.hpp"
#include "decoq/rng.hpp"

namespace decoq {

/// Search for the initial pure state whose entanglement AFTER one pass of
/// the channel is largest. The objective is always the evolved state's
/// global measure, never the initial state's.
struct SearchConfig {
    SearchConfig(int n_qubits_, NoiseChannel channel_) : n_qubits(n_qubits_), channel(channel_) {}

    int n_qubits;
    NoiseChannel channel;
    int max_iters = 20000;
    double initial_step = 0.2;
    double step_decay = 0.5;
    int patience = 200;       // consecutive rejections before the step shrinks
    double min_step = 1e-6;   // terminate once the step decays below this
    int restarts = 16;
    std::uint64_t seed = 0;

    /// When set, the search is restricted to the local-unitary orbit of
    /// this state: parameters become 3 Euler angles per qubit instead of
    /// raw amplitudes.
    std::optional<PureState> lu_base;
};

struct SearchResult {
    PureState best_state;    // the initial state found
    double evolved_score;    // global E of channel(best_state)
    double initial_score;    // global E of best_state itself
    /// Accepted points of the winning restart, starting with (0, start
    /// score); strictly increasing in score.
    std::vector<std::pair<int, double>> trajectory;
    int restart_index;
};

/// Global E of the evolved state: entanglement_profile(apply_all(channel,
/// |psi><psi|)).global.
double score(const PureState& psi, const NoiseChannel& channel);

/// Adds independent complex Gaussian noise of scale `step` to every
/// amplitude, then renormalizes. Retries on the (measure-zero) chance of
/// cancellation to the zero vector.
PureState perturb(const PureState& state, double step, Rng& rng);

/// Greedy accept-if-strictly-better hill climb with step-size annealing:
/// after `patience` consecutive rejections the step shrinks by step_decay;
/// a restart terminates when the step drops below min_step or max_iters is
/// reached. Each restart r runs from an independent random start with its
/// own Rng(seed + r); the best evolved score wins, lowest restart index
/// breaking ties. Deterministic for a fixed config.
SearchResult search(const SearchConfig& config);

}  // namespace decoq
