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

#include "decoq/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "decoq/states.hpp"

namespace decoq {

namespace {

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("empty p grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw std::invalid_argument("grid value " + std::to_string(grid[i]) +
                                        " outside [0, 1]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("grid values must be strictly ascending");
        }
    }
}

}  // namespace

std::vector<double> make_grid(double pmin, double pmax, int steps) {
    if (steps < 1) throw std::invalid_argument("grid needs at least one point");
    if (!(pmin >= 0.0 && pmax <= 1.0 && pmin <= pmax)) {
        throw std::invalid_argument("grid bounds must satisfy 0 <= pmin <= pmax <= 1");
    }
    if (steps == 1) {
        if (pmin != pmax) {
            throw std::invalid_argument("a single-point grid needs pmin = pmax");
        }
        return {pmin};
    }
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] =
            pmin + (pmax - pmin) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    grid.back() = pmax;  // exact endpoint, no rounding residue
    return grid;
}

std::vector<SweepRecord> sweep(const PureState& state, ChannelKind kind,
                               std::span<const double> grid, bool with_per_cut) {
    validate_grid(grid);
    const DensityMatrix initial = DensityMatrix::from_pure(state);
    std::vector<SweepRecord> records;
    records.reserve(grid.size());
    for (double p : grid) {
        const DensityMatrix evolved = apply_all(NoiseChannel(kind, p), initial);
        EntanglementProfile profile = entanglement_profile(evolved, with_per_cut);
        records.push_back(
            {p, profile.global, std::move(profile.per_m), std::move(profile.per_cut)});
    }
    return records;
}

LuSurvey lu_survey(const PureState& base, ChannelKind kind, std::span<const double> grid,
                   int n_samples, std::uint64_t seed) {
    validate_grid(grid);
    if (n_samples < 1) throw std::invalid_argument("survey needs at least one sample");

    LuSurvey survey;
    survey.grid.assign(grid.begin(), grid.end());
    survey.curves.reserve(static_cast<std::size_t>(n_samples));
    for (int s = 0; s < n_samples; ++s) {
        const PureState variant =
            random_local_unitary_state(base, seed + static_cast<std::uint64_t>(s));
        std::vector<double> curve;
        curve.reserve(grid.size());
        for (const SweepRecord& record : sweep(variant, kind, grid)) {
            curve.push_back(record.global_e);
        }
        survey.curves.push_back(std::move(curve));
    }

    survey.envelope_min.assign(grid.size(), 0.0);
    survey.envelope_max.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double lo = survey.curves[0][i], hi = survey.curves[0][i];
        for (const std::vector<double>& curve : survey.curves) {
            lo = std::min(lo, curve[i]);
            hi = std::max(hi, curve[i]);
        }
        survey.envelope_min[i] = lo;
        survey.envelope_max[i] = hi;
    }
    return survey;
}

std::string to_string(BoundOrientation orientation) {
    switch (orientation) {
        case BoundOrientation::UnbalancedFirst: return "unbalanced-first";
        case BoundOrientation::BalancedFirst: return "balanced-first";
        case BoundOrientation::Simultaneous: return "simultaneous";
    }
    throw std::invalid_argument("to_string: unknown bound orientation");
}

BoundWindow bound_scan(const PureState& state, ChannelKind kind, std::span<const double> grid,
                       double threshold) {
    validate_grid(grid);
    if (!(threshold > 0.0)) throw std::invalid_argument("vanishing threshold must be positive");

    const int n = state.n_qubits();
    const std::vector<Bipartition> unbalanced = enumerate_bipartitions(n, 1);
    const std::vector<Bipartition> balanced = enumerate_bipartitions(n, n / 2);
    const DensityMatrix initial = DensityMatrix::from_pure(state);

    auto class_vanished = [&](const DensityMatrix& rho, const std::vector<Bipartition>& cuts) {
        for (const Bipartition& cut : cuts) {
            if (negativity(rho, cut) >= threshold) return false;
        }
        return true;
    };

    BoundWindow window{grid.back(), grid.back(), false, false, BoundOrientation::Simultaneous};
    for (double p : grid) {
        if (window.unbalanced_vanished && window.balanced_vanished) break;
        const DensityMatrix evolved = apply_all(NoiseChannel(kind, p), initial);
        if (!window.unbalanced_vanished && class_vanished(evolved, unbalanced)) {
            window.p_unbalanced_vanish = p;
            window.unbalanced_vanished = true;
        }
        if (!window.balanced_vanished && class_vanished(evolved, balanced)) {
            window.p_balanced_vanish = p;
            window.balanced_vanished = true;
        }
    }

    if (window.p_unbalanced_vanish < window.p_balanced_vanish) {
        window.orientation = BoundOrientation::UnbalancedFirst;
    } else if (window.p_balanced_vanish < window.p_unbalanced_vanish) {
        window.orientation = BoundOrientation::BalancedFirst;
    }
    return window;
}

namespace {

void append_value(std::string& line, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    line += buf;
}

}  // namespace

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    if (records.empty()) throw std::invalid_argument("refusing to write an empty sweep");

    // Column order for per-cut data: lexicographic by subset across classes.
    std::vector<std::size_t> cut_order(records.front().per_cut.size());
    for (std::size_t i = 0; i < cut_order.size(); ++i) cut_order[i] = i;
    std::sort(cut_order.begin(), cut_order.end(), [&](std::size_t a, std::size_t b) {
        return records.front().per_cut[a].first.subset() <
               records.front().per_cut[b].first.subset();
    });

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");

    std::string line = "p,E";
    for (std::size_t m = 1; m <= records.front().per_m.size(); ++m) {
        line += ",E" + std::to_string(m);
    }
    for (std::size_t idx : cut_order) {
        line += ",cut_" + records.front().per_cut[idx].first.label();
    }
    out << line << "\n";

    for (const SweepRecord& record : records) {
        if (record.per_m.size() != records.front().per_m.size() ||
            record.per_cut.size() != records.front().per_cut.size()) {
            throw std::invalid_argument("sweep records disagree on column layout");
        }
        line.clear();
        append_value(line, record.p);
        line += ',';
        append_value(line, record.global_e);
        for (double e : record.per_m) {
            line += ',';
            append_value(line, e);
        }
        for (std::size_t idx : cut_order) {
            line += ',';
            append_value(line, record.per_cut[idx].second);
        }
        out << line << "\n";
    }
    if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace decoq
