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

#include "decoq/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "decoq/entanglement.hpp"
#include "decoq/states.hpp"

namespace decoq {

namespace {

void validate(const SearchConfig& cfg) {
    if (cfg.n_qubits < 2 || cfg.n_qubits > kMaxQubits) {
        throw std::invalid_argument("search needs 2 to " + std::to_string(kMaxQubits) +
                                    " qubits, got " + std::to_string(cfg.n_qubits));
    }
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(cfg.step_decay > 0.0 && cfg.step_decay < 1.0)) {
        throw std::invalid_argument("step_decay must lie in (0, 1)");
    }
    if (!(cfg.initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
    if (!(cfg.min_step > 0.0 && cfg.min_step < cfg.initial_step)) {
        throw std::invalid_argument("min_step must lie in (0, initial_step)");
    }
    if (cfg.patience < 1) throw std::invalid_argument("patience must be >= 1");
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (cfg.lu_base && cfg.lu_base->n_qubits() != cfg.n_qubits) {
        throw std::invalid_argument("lu_base has " + std::to_string(cfg.lu_base->n_qubits()) +
                                    " qubits, config says " + std::to_string(cfg.n_qubits));
    }
}

/// ZYZ Euler unitary Rz(a) Ry(b) Rz(c); three angles reach every
/// single-qubit rotation, and per-qubit global phases merge into one
/// overall phase that no entanglement quantity sees.
ComplexMatrix euler_unitary(double a, double b, double c) {
    const double cb = std::cos(b / 2.0), sb = std::sin(b / 2.0);
    const complexd pa = std::polar(1.0, -a / 2.0), ma = std::polar(1.0, a / 2.0);
    const complexd pc = std::polar(1.0, -c / 2.0), mc = std::polar(1.0, c / 2.0);
    ComplexMatrix u(2);
    u(0, 0) = pa * cb * pc;
    u(0, 1) = -pa * sb * mc;
    u(1, 0) = ma * sb * pc;
    u(1, 1) = ma * cb * mc;
    return u;
}

PureState state_from_angles(const PureState& base, const std::vector<double>& angles) {
    const int n = base.n_qubits();
    std::vector<ComplexMatrix> us;
    us.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const std::size_t k = 3 * static_cast<std::size_t>(q);
        us.push_back(euler_unitary(angles[k], angles[k + 1], angles[k + 2]));
    }
    return apply_local_unitaries(base, us);
}

struct Candidate {
    PureState state;
    std::vector<double> angles;  // only used in LU-restricted mode
};

Candidate random_start(const SearchConfig& cfg, Rng& rng) {
    if (cfg.lu_base) {
        std::vector<double> angles(3 * static_cast<std::size_t>(cfg.n_qubits));
        for (double& a : angles) a = 2.0 * std::numbers::pi * rng.uniform();
        return {state_from_angles(*cfg.lu_base, angles), std::move(angles)};
    }
    return {haar_random_state(cfg.n_qubits, rng), {}};
}

Candidate propose(const SearchConfig& cfg, const Candidate& current, double step, Rng& rng) {
    if (cfg.lu_base) {
        std::vector<double> angles = current.angles;
        for (double& a : angles) a += step * rng.normal();
        return {state_from_angles(*cfg.lu_base, angles), std::move(angles)};
    }
    return {perturb(current.state, step, rng), {}};
}

}  // namespace

double score(const PureState& psi, const NoiseChannel& channel) {
    const DensityMatrix evolved = apply_all(channel, DensityMatrix::from_pure(psi));
    return entanglement_profile(evolved).global;
}

PureState perturb(const PureState& state, double step, Rng& rng) {
    if (!(step > 0.0)) throw std::invalid_argument("perturbation step must be positive");
    const std::span<const complexd> amps = state.amplitudes();
    while (true) {
        std::vector<complexd> next(amps.begin(), amps.end());
        double norm_sq = 0.0;
        for (complexd& a : next) {
            a += step * rng.complex_normal();
            norm_sq += std::norm(a);
        }
        if (norm_sq < 1e-24) continue;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (complexd& a : next) a *= inv;
        return PureState(state.n_qubits(), std::move(next));
    }
}

SearchResult search(const SearchConfig& cfg) {
    validate(cfg);

    SearchResult best{PureState(1, {complexd{1.0, 0.0}, complexd{}}), -1.0, 0.0, {}, -1};
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
        Candidate current = random_start(cfg, rng);
        double current_score = score(current.state, cfg.channel);

        std::vector<std::pair<int, double>> trajectory{{0, current_score}};
        double step = cfg.initial_step;
        int rejections = 0;
        for (int iter = 1; iter <= cfg.max_iters && step >= cfg.min_step; ++iter) {
            Candidate candidate = propose(cfg, current, step, rng);
            const double candidate_score = score(candidate.state, cfg.channel);
            if (candidate_score > current_score) {
                current = std::move(candidate);
                current_score = candidate_score;
                trajectory.emplace_back(iter, candidate_score);
                rejections = 0;
            } else if (++rejections >= cfg.patience) {
                step *= cfg.step_decay;
                rejections = 0;
            }
        }

        if (current_score > best.evolved_score) {
            best.best_state = std::move(current.state);
            best.evolved_score = current_score;
            best.trajectory = std::move(trajectory);
            best.restart_index = r;
        }
    }

    best.initial_score =
        entanglement_profile(DensityMatrix::from_pure(best.best_state)).global;
    return best;
}

}  // namespace decoq
