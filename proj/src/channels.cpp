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

#include "decoq/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace decoq {

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseDamping: return "pd";
        case ChannelKind::Depolarizing: return "dep";
        case ChannelKind::BitFlip: return "bf";
        case ChannelKind::PhaseFlip: return "pf";
        case ChannelKind::BitPhaseFlip: return "bpf";
    }
    throw std::invalid_argument("to_string: unknown channel kind");
}

ChannelKind channel_kind_from_string(std::string_view name) {
    if (name == "pd") return ChannelKind::PhaseDamping;
    if (name == "dep") return ChannelKind::Depolarizing;
    if (name == "bf") return ChannelKind::BitFlip;
    if (name == "pf") return ChannelKind::PhaseFlip;
    if (name == "bpf") return ChannelKind::BitPhaseFlip;
    throw std::invalid_argument("unknown channel '" + std::string(name) +
                                "' (expected pd, dep, bf, pf, or bpf)");
}

NoiseChannel::NoiseChannel(ChannelKind kind_, double p_) : kind(kind_), p(p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("channel strength p must lie in [0, 1], got " +
                                    std::to_string(p_));
    }
}

namespace {

ComplexMatrix scaled(double factor, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    out *= factor;
    return out;
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

std::vector<ComplexMatrix> flip_family(double p, const ComplexMatrix& sigma) {
    std::vector<ComplexMatrix> ops;
    ops.push_back(scaled(std::sqrt(1.0 - p / 2.0), identity2()));
    ops.push_back(scaled(std::sqrt(p / 2.0), sigma));
    return ops;
}

}  // namespace

std::vector<ComplexMatrix> kraus_operators(const NoiseChannel& channel) {
    const double p = channel.p;
    switch (channel.kind) {
        case ChannelKind::PhaseDamping: {
            ComplexMatrix e0(2), e1(2);
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            e1(1, 1) = std::sqrt(p);
            std::vector<ComplexMatrix> ops;
            ops.push_back(std::move(e0));
            ops.push_back(std::move(e1));
            return ops;
        }
        case ChannelKind::Depolarizing: {
            const double pp = 3.0 * p / 4.0;
            std::vector<ComplexMatrix> ops;
            ops.push_back(scaled(std::sqrt(1.0 - pp), identity2()));
            ops.push_back(scaled(std::sqrt(pp / 3.0), pauli_x()));
            ops.push_back(scaled(std::sqrt(pp / 3.0), pauli_y()));
            ops.push_back(scaled(std::sqrt(pp / 3.0), pauli_z()));
            return ops;
        }
        case ChannelKind::BitFlip: return flip_family(p, pauli_x());
        case ChannelKind::PhaseFlip: return flip_family(p, pauli_z());
        case ChannelKind::BitPhaseFlip: return flip_family(p, pauli_y());
    }
    throw std::invalid_argument("kraus_operators: unknown channel kind");
}

namespace {

// Accumulates E rho E^dag for one 2x2 Kraus operator acting on `qubit`,
// without forming the 2^N x 2^N lifted operator. Entries pair up along the
// target qubit's bit in both row and column index.
void accumulate_kraus_term(const ComplexMatrix& e, const ComplexMatrix& rho, int bit,
                           ComplexMatrix& out) {
    const int dim = rho.dim();
    const complexd e00 = e(0, 0), e01 = e(0, 1), e10 = e(1, 0), e11 = e(1, 1);
    for (int r = 0; r < dim; ++r) {
        if ((r & bit) != 0) continue;
        const int r1 = r | bit;
        for (int c = 0; c < dim; ++c) {
            if ((c & bit) != 0) continue;
            const int c1 = c | bit;
            const complexd b00 = rho(r, c), b01 = rho(r, c1);
            const complexd b10 = rho(r1, c), b11 = rho(r1, c1);
            // E B E^dag on the 2x2 block spanned by the target bit.
            const complexd t00 = e00 * b00 + e01 * b10;
            const complexd t01 = e00 * b01 + e01 * b11;
            const complexd t10 = e10 * b00 + e11 * b10;
            const complexd t11 = e10 * b01 + e11 * b11;
            out(r, c) += t00 * std::conj(e00) + t01 * std::conj(e01);
            out(r, c1) += t00 * std::conj(e10) + t01 * std::conj(e11);
            out(r1, c) += t10 * std::conj(e00) + t11 * std::conj(e01);
            out(r1, c1) += t10 * std::conj(e10) + t11 * std::conj(e11);
        }
    }
}

}  // namespace

DensityMatrix apply_single(const NoiseChannel& channel, const DensityMatrix& rho, int qubit) {
    const int n = rho.n_qubits();
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("apply_single: qubit " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(n) + " qubits");
    }
    const int bit = qubit_bit(n, qubit);
    ComplexMatrix out(rho.matrix().dim());
    for (const ComplexMatrix& e : kraus_operators(channel)) {
        accumulate_kraus_term(e, rho.matrix(), bit, out);
    }
    return DensityMatrix(n, std::move(out));
}

DensityMatrix apply_all(const NoiseChannel& channel, const DensityMatrix& rho) {
    DensityMatrix out = rho;
    for (int q = 0; q < rho.n_qubits(); ++q) {
        out = apply_single(channel, out, q);
    }
    return out;
}

}  // namespace decoq
