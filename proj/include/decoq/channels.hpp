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

#include <string>
#include <string_view>
#include <vector>

#include "decoq/linalg.hpp"

namespace decoq {

/// The five independent-environment single-qubit noise channels.
enum class ChannelKind {
    PhaseDamping,
    Depolarizing,
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
};

/// CLI/CSV names: pd, dep, bf, pf, bpf.
std::string to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(std::string_view name);

/// A noise channel with strength p in [0, 1]. p is dimensionless; it plays
/// the role of elapsed time.
struct NoiseChannel {
    ChannelKind kind;
    double p;

    NoiseChannel(ChannelKind kind_, double p_);
};

/// Kraus operators of the channel, 2x2 each, satisfying sum E_j^dag E_j = I.
///
/// PhaseDamping:  {diag(1, sqrt(1-p)), diag(0, sqrt(p))}
/// Depolarizing:  {sqrt(1-p') I, sqrt(p'/3) sigma_x, sqrt(p'/3) sigma_y,
///                 sqrt(p'/3) sigma_z} with p' = 3p/4, the unique value for
///                 which this Kraus set realizes rho -> (p/2) I + (1-p) rho.
/// BitFlip:       {sqrt(1-p/2) I, sqrt(p/2) sigma_x}
/// PhaseFlip:     {sqrt(1-p/2) I, sqrt(p/2) sigma_z}
/// BitPhaseFlip:  {sqrt(1-p/2) I, sqrt(p/2) sigma_y}
std::vector<ComplexMatrix> kraus_operators(const NoiseChannel& channel);

/// Applies the channel to one qubit of an N-qubit state.
DensityMatrix apply_single(const NoiseChannel& channel, const DensityMatrix& rho, int qubit);

/// Applies the channel to every qubit, each coupled to its own environment.
/// Sequential per-qubit application; local channels on distinct qubits
/// commute, so the order does not matter.
DensityMatrix apply_all(const NoiseChannel& channel, const DensityMatrix& rho);

}  // namespace decoq
