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
#include <vector>

#include "decoq/linalg.hpp"

namespace decoq {

/// Negativities below this are reported as exactly 0. Shared with the
/// bound-entanglement scanner as its vanishing threshold.
inline constexpr double kNegativityFloor = 1e-10;

/// One side of a bipartition of an n-qubit register. Any non-empty proper
/// subset is a valid cut (so complement symmetry can be stated); the
/// canonical enumeration only emits subsets with size <= n/2, where a
/// balanced subset must contain qubit 0 (its complement is the same cut).
class Bipartition {
public:
    Bipartition(int n_qubits, std::vector<int> subset);

    int n_qubits() const { return n_qubits_; }
    const std::vector<int>& subset() const { return subset_; }
    int m() const { return static_cast<int>(subset_.size()); }

    bool is_canonical() const;
    Bipartition complement() const;

    /// Qubit indices joined by '-', e.g. "0-2-3". Stable CSV column key.
    std::string label() const;

    bool operator==(const Bipartition& other) const = default;

private:
    int n_qubits_;
    std::vector<int> subset_;  // sorted, distinct, proper subset
};

/// Number of nonequivalent cuts: 2^(n-1) - 1. Requires n >= 2.
long long n_cuts(int n);

/// All nonequivalent size-m cuts in lexicographic subset order. Count is
/// C(n,m), halved when m = n/2 (each balanced cut listed once, the
/// representative containing qubit 0). Requires 1 <= m <= floor(n/2).
std::vector<Bipartition> enumerate_bipartitions(int n, int m);

/// Negativity across the cut: (trace norm of the partial transpose - 1)/2,
/// the sum of |lambda| over negative eigenvalues. 0.5 for a Bell pair.
/// Values below kNegativityFloor collapse to 0.
double negativity(const DensityMatrix& rho, const Bipartition& cut);

/// Two-stage bipartition average. per_m[m-1] holds E^(m), the mean
/// negativity over nonequivalent m-cuts; global is the mean of the per_m
/// values, weighting each size class equally.
struct EntanglementProfile {
    std::vector<double> per_m;
    double global = 0.0;
    std::vector<std::pair<Bipartition, double>> per_cut;  // filled on request
};

EntanglementProfile entanglement_profile(const DensityMatrix& rho, bool with_per_cut = false);

/// Flat mean over all 2^(n-1) - 1 cuts, biased toward balanced cuts.
/// Diagnostic only; the headline measure is entanglement_profile.
double flat_average_negativity(const DensityMatrix& rho);

}  // namespace decoq
