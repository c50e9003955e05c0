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

// Independent oracles used by the test suites. Everything here recomputes
// results through a different route than the library code under test.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/linalg.hpp"
#include "decoq/rng.hpp"
#include "decoq/states.hpp"

namespace decoq::testing {

/// Pure-state negativity via the Schmidt route: with lambda the spectrum of
/// the reduced state across the cut, N = ((sum_i sqrt(lambda_i))^2 - 1)/2.
/// Never touches the partial transpose.
inline double schmidt_negativity(const PureState& psi, const Bipartition& cut) {
    const DensityMatrix reduced = partial_trace(DensityMatrix::from_pure(psi), cut.subset());
    double sum_sqrt = 0.0;
    for (double lambda : hermitian_eigenvalues(reduced.matrix())) {
        if (lambda > 0.0) sum_sqrt += std::sqrt(lambda);
    }
    const double value = (sum_sqrt * sum_sqrt - 1.0) / 2.0;
    return value > 0.0 ? value : 0.0;
}

/// Full tensor-sum evolution: sum over all M^N choices of one Kraus operator
/// per qubit of (E_{j1} x ... x E_{jN}) rho (...)^dag. Exponential in N;
/// keep N <= 3.
inline ComplexMatrix brute_force_apply_all(const NoiseChannel& channel, const DensityMatrix& rho) {
    const int n = rho.n_qubits();
    const std::vector<ComplexMatrix> kraus = kraus_operators(channel);
    const std::size_t m = kraus.size();
    std::size_t terms = 1;
    for (int q = 0; q < n; ++q) terms *= m;
    ComplexMatrix out(rho.matrix().dim());
    for (std::size_t t = 0; t < terms; ++t) {
        std::size_t code = t;
        ComplexMatrix op = kraus[code % m];
        code /= m;
        for (int q = 1; q < n; ++q) {
            op = tensor_product(op, kraus[code % m]);
            code /= m;
        }
        // Qubit 0 is the most significant basis bit, so its factor must be
        // leftmost; building left-to-right keeps that ordering.
        out += op * rho.matrix() * op.adjoint();
    }
    return out;
}

/// Depolarizing evolution through the white-noise map applied per qubit:
/// rho -> p * (I/2 at qubit q) (x) tr_q(rho) + (1 - p) rho. No Kraus
/// operators involved.
inline ComplexMatrix depolarizing_white_noise_map(const DensityMatrix& rho, double p) {
    const int n = rho.n_qubits();
    ComplexMatrix current = rho.matrix();
    for (int q = 0; q < n; ++q) {
        std::vector<int> keep;
        for (int k = 0; k < n; ++k) {
            if (k != q) keep.push_back(k);
        }
        const int bit = qubit_bit(n, q);
        const int dim = current.dim();
        // Reduced state over the kept qubits, recomputed from `current`.
        // Tracing out the only qubit leaves the scalar trace, which is 1.
        DensityMatrix stage(n, current);
        const bool has_rest = !keep.empty();
        const DensityMatrix rest =
            has_rest ? partial_trace(stage, keep) : DensityMatrix::maximally_mixed(1);
        ComplexMatrix next(dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                complexd value = (1.0 - p) * current(r, c);
                if ((r & bit) == (c & bit)) {
                    // Strip qubit q's bit to index the reduced state.
                    const int r_rest = ((r & ~(bit | (bit - 1))) >> 1) | (r & (bit - 1));
                    const int c_rest = ((c & ~(bit | (bit - 1))) >> 1) | (c & (bit - 1));
                    value += p * 0.5 *
                             (has_rest ? rest.matrix()(r_rest, c_rest) : complexd{1.0, 0.0});
                }
                next(r, c) = value;
            }
        }
        current = std::move(next);
    }
    return current;
}

/// Random rank-k mixed state: mixture of Haar-random pure states with
/// uniform random weights.
inline DensityMatrix random_density_matrix(int n, Rng& rng, int rank = 3) {
    std::vector<double> weights(static_cast<std::size_t>(rank));
    double total = 0.0;
    for (double& w : weights) {
        w = rng.uniform() + 1e-3;
        total += w;
    }
    ComplexMatrix sum(1 << n);
    for (double w : weights) {
        const DensityMatrix pure = DensityMatrix::from_pure(haar_random_state(n, rng));
        ComplexMatrix term = pure.matrix();
        term *= w / total;
        sum += term;
    }
    return DensityMatrix(n, std::move(sum));
}

inline ComplexMatrix hadamard2() {
    ComplexMatrix h(2);
    const double a = 1.0 / std::sqrt(2.0);
    h(0, 0) = a;
    h(0, 1) = a;
    h(1, 0) = a;
    h(1, 1) = -a;
    return h;
}

}  // namespace decoq::testing
