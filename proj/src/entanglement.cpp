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

#include "decoq/entanglement.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace decoq {

Bipartition::Bipartition(int n_qubits, std::vector<int> subset)
    : n_qubits_(n_qubits), subset_(std::move(subset)) {
    if (n_qubits_ < 2 || n_qubits_ > kMaxQubits) {
        throw std::invalid_argument("bipartition needs 2 to " + std::to_string(kMaxQubits) +
                                    " qubits, got " + std::to_string(n_qubits_));
    }
    if (subset_.empty() || subset_.size() >= static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("bipartition subset must be a non-empty proper subset");
    }
    std::sort(subset_.begin(), subset_.end());
    for (std::size_t i = 0; i < subset_.size(); ++i) {
        if (subset_[i] < 0 || subset_[i] >= n_qubits_) {
            throw std::invalid_argument("bipartition qubit " + std::to_string(subset_[i]) +
                                        " out of range for " + std::to_string(n_qubits_) +
                                        " qubits");
        }
        if (i > 0 && subset_[i] == subset_[i - 1]) {
            throw std::invalid_argument("bipartition subset repeats qubit " +
                                        std::to_string(subset_[i]));
        }
    }
}

bool Bipartition::is_canonical() const {
    if (2 * m() < n_qubits_) return true;
    if (2 * m() > n_qubits_) return false;
    return subset_.front() == 0;
}

Bipartition Bipartition::complement() const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n_qubits_ - m()));
    std::size_t pos = 0;
    for (int q = 0; q < n_qubits_; ++q) {
        if (pos < subset_.size() && subset_[pos] == q) {
            ++pos;
        } else {
            rest.push_back(q);
        }
    }
    return Bipartition(n_qubits_, std::move(rest));
}

std::string Bipartition::label() const {
    std::string out;
    for (std::size_t i = 0; i < subset_.size(); ++i) {
        if (i > 0) out += '-';
        out += std::to_string(subset_[i]);
    }
    return out;
}

long long n_cuts(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("n_cuts needs 2 to " + std::to_string(kMaxQubits) +
                                    " qubits, got " + std::to_string(n));
    }
    return (1LL << (n - 1)) - 1;
}

std::vector<Bipartition> enumerate_bipartitions(int n, int m) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("enumerate_bipartitions needs 2 to " +
                                    std::to_string(kMaxQubits) + " qubits, got " +
                                    std::to_string(n));
    }
    if (m < 1 || 2 * m > n) {
        throw std::invalid_argument("cut size " + std::to_string(m) + " outside [1, " +
                                    std::to_string(n / 2) + "] for " + std::to_string(n) +
                                    " qubits");
    }
    const bool balanced = (2 * m == n);
    std::vector<Bipartition> cuts;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!balanced || pick.front() == 0) cuts.emplace_back(n, pick);
        // Advance to the next combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return cuts;
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
    if (cut.n_qubits() != rho.n_qubits()) {
        throw std::invalid_argument("cut is over " + std::to_string(cut.n_qubits()) +
                                    " qubits but the state has " +
                                    std::to_string(rho.n_qubits()));
    }
    const ComplexMatrix pt = partial_transpose(rho, cut.subset());
    double sum_negative = 0.0;
    for (double lambda : hermitian_eigenvalues(pt)) {
        if (lambda < 0.0) sum_negative -= lambda;
    }
    return sum_negative < kNegativityFloor ? 0.0 : sum_negative;
}

EntanglementProfile entanglement_profile(const DensityMatrix& rho, bool with_per_cut) {
    const int n = rho.n_qubits();
    if (n < 2) throw std::invalid_argument("entanglement profile needs at least 2 qubits");
    EntanglementProfile profile;
    const int m_max = n / 2;
    profile.per_m.reserve(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        double sum = 0.0;
        const std::vector<Bipartition> cuts = enumerate_bipartitions(n, m);
        for (const Bipartition& cut : cuts) {
            const double value = negativity(rho, cut);
            sum += value;
            if (with_per_cut) profile.per_cut.emplace_back(cut, value);
        }
        profile.per_m.push_back(sum / static_cast<double>(cuts.size()));
    }
    double total = 0.0;
    for (double e : profile.per_m) total += e;
    profile.global = total / static_cast<double>(m_max);
    return profile;
}

double flat_average_negativity(const DensityMatrix& rho) {
    const int n = rho.n_qubits();
    double sum = 0.0;
    long long count = 0;
    for (int m = 1; 2 * m <= n; ++m) {
        for (const Bipartition& cut : enumerate_bipartitions(n, m)) {
            sum += negativity(rho, cut);
            ++count;
        }
    }
    // count equals n_cuts(n): every unordered cut appears once, named by
    // its smaller side (or its qubit-0 representative when balanced).
    return sum / static_cast<double>(count);
}

}  // namespace decoq
