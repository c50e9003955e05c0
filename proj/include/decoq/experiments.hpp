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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/linalg.hpp"

namespace decoq {

/// Uniform grid of `steps` points from pmin to pmax inclusive (a single
/// point when steps = 1, requiring pmin = pmax).
std::vector<double> make_grid(double pmin, double pmax, int steps);

/// One grid point of a decay sweep.
struct SweepRecord {
    double p;
    double global_e;
    std::vector<double> per_m;
    std::vector<std::pair<Bipartition, double>> per_cut;  // filled on request
};

/// Entanglement decay along the grid. Each point evolves the SAME initial
/// state at strength p (p is the abscissa, not a composable time step).
std::vector<SweepRecord> sweep(const PureState& state, ChannelKind kind,
                               std::span<const double> grid, bool with_per_cut = false);

/// Decay curves of random local-unitary variants of a base state.
/// Sample s uses seed + s, so the survey is reproducible point by point.
struct LuSurvey {
    std::vector<double> grid;
    std::vector<std::vector<double>> curves;  // curves[sample][grid index]
    std::vector<double> envelope_min;         // per grid index, over samples
    std::vector<double> envelope_max;
};

LuSurvey lu_survey(const PureState& base, ChannelKind kind, std::span<const double> grid,
                   int n_samples, std::uint64_t seed);

enum class BoundOrientation { UnbalancedFirst, BalancedFirst, Simultaneous };

/// Where the two extreme bipartition classes lose their negativity. A PPT
/// class with NPT elsewhere signals bound entanglement across those cuts.
struct BoundWindow {
    double p_unbalanced_vanish;  // first grid p with every 1:(N-1) cut below threshold
    double p_balanced_vanish;    // same for the most balanced class
    bool unbalanced_vanished;    // false: never vanished, endpoint reported
    bool balanced_vanished;
    BoundOrientation orientation;
};

BoundWindow bound_scan(const PureState& state, ChannelKind kind, std::span<const double> grid,
                       double threshold = kNegativityFloor);

std::string to_string(BoundOrientation orientation);

/// CSV with header `p,E,E1,...,Em` plus one `cut_<label>` column per cut
/// (lexicographic by subset) when records carry per-cut values. Full double
/// precision; byte-deterministic for identical records.
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);

}  // namespace decoq
