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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decoq/linalg.hpp"

namespace decoq {

class Rng;

/// (|0...0> + |1...1>)/sqrt(2). Requires n >= 2.
PureState make_ghz(int n);

/// (1/sqrt(n)) sum over the n basis states with exactly one bit set.
/// Requires n >= 2.
PureState make_w(int n);

/// The 4-qubit Higuchi-Sudbery state
///   (1/sqrt(6)) [|1100> + |0011> + w(|1001> + |0110>) + w^2(|1010> + |0101>)]
/// with w = exp(2 pi i / 3). All single-qubit marginals are I/2.
PureState make_hs();

/// The 5-qubit robustness-optimized state, sixteen amplitudes of modulus 1/4:
///   (1/4) [-|5> + |6> - |9> + |10> + |17> + |18> - |29> - |30>
///          + i(-|0> + |3> - |12> + |15> - |20> - |23> + |24> + |27>)].
PureState make_rob5();

/// |H>_n and its companion |HBar>_n, built from the recurrence
///   |H>_n    = (|0>|H>_{n-1} + |1>|HBar>_{n-1}) / sqrt(2)
///   |HBar>_n = (|1>|H>_{n-1} + |0>|HBar>_{n-1}) / sqrt(2)
/// with |H>_2 = (|00> + |11>)/sqrt(2), |HBar>_2 = (|01> + |10>)/sqrt(2).
/// |H>_n equals the n-fold single-qubit Hadamard applied to make_ghz(n).
/// Requires n >= 2.
PureState make_h(int n);
PureState make_hbar(int n);

/// Haar-random pure state: normalized vector of iid complex Gaussians.
PureState haar_random_state(int n, Rng& rng);

/// Applies us[q] (2x2 unitary) to qubit q. us.size() must equal n_qubits.
PureState apply_local_unitaries(const PureState& psi, std::span<const ComplexMatrix> us);

/// Applies an independent Haar-distributed 2x2 unitary to each qubit of
/// `base`. Deterministic given seed.
PureState random_local_unitary_state(const PureState& base, std::uint64_t seed);

/// State file I/O. Canonical format:
///   nqubits <N>
///   <index> <re> <im>        (one line per nonzero amplitude, decimal index)
/// Unlisted indices are zero. A headerless file of `<re> <im>` lines is also
/// accepted as a dense amplitude list; its length must be a power of two.
/// Norm deviating from 1 by less than 1e-6 is renormalized, anything worse
/// is rejected. Lines starting with '#' are comments.
PureState load_state(const std::string& path);
void save_state(const PureState& psi, const std::string& path);

enum class StateFamily { GHZ, W, HS, Rob5, H, HBar, File };

/// A named initial state. HS fixes n_qubits = 4 and Rob5 fixes 5; GHZ, W, H,
/// and HBar require n_qubits >= 2; File takes its qubit count from the file.
struct StateSpec {
    StateFamily family;
    int n_qubits = 0;
    std::optional<std::string> path;
};

/// Parses a CLI token: `ghz`, `w`, `hs`, `rob5`, `h`, `hbar`, or
/// `file:<path>`. `n_qubits` is the register size requested alongside the
/// token. Fixed-size families reject a mismatching n_qubits; File records
/// the requested size and make_state checks it against the file.
StateSpec parse_state_spec(std::string_view token, int n_qubits);

PureState make_state(const StateSpec& spec);

std::string to_string(StateFamily family);

}  // namespace decoq
