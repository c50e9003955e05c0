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

#include "decoq/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/experiments.hpp"
#include "decoq/linalg.hpp"
#include "decoq/optimizer.hpp"
#include "decoq/states.hpp"

namespace decoq {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct SweepArgs {
    std::string channel, state, out;
    int n = 0, steps = 101;
    double pmin = 0.0, pmax = 1.0;
    bool per_cut = false;
    std::uint64_t seed = 0;
};

struct OptimizeArgs {
    std::string channel, base, out;
    int n = 0, restarts = 16, iters = 20000;
    double p = 0.0;
    bool lu_restricted = false;
    std::uint64_t seed = 0;
};

struct BoundArgs {
    std::string channel, state, out;
    int n = 0;
    double threshold = kNegativityFloor;
    std::uint64_t seed = 0;
};

struct SurveyArgs {
    std::string channel, base, out;
    int n = 0, samples = 100;
    std::uint64_t seed = 0;
};

struct StateArgs {
    std::string family, out;
    int n = 0;
};

void run_sweep(const SweepArgs& a, std::ostream& err) {
    const ChannelKind kind = channel_kind_from_string(a.channel);
    const PureState psi = make_state(parse_state_spec(a.state, a.n));
    const std::vector<double> grid = make_grid(a.pmin, a.pmax, a.steps);
    err << "# decoq sweep channel=" << a.channel << " state=" << a.state << " n=" << a.n
        << " pmin=" << fmt(a.pmin) << " pmax=" << fmt(a.pmax) << " steps=" << a.steps
        << " per_cut=" << (a.per_cut ? 1 : 0) << " seed=" << a.seed << " out=" << a.out << "\n";
    const std::vector<SweepRecord> records = sweep(psi, kind, grid, a.per_cut);
    write_csv(records, a.out);
    err << "wrote " << records.size() << " rows to " << a.out << "\n";
}

void run_optimize(const OptimizeArgs& a, std::ostream& err) {
    const ChannelKind kind = channel_kind_from_string(a.channel);
    if (!a.lu_restricted && !a.base.empty()) {
        throw std::invalid_argument("--base is only meaningful with --lu-restricted");
    }
    SearchConfig cfg{a.n, NoiseChannel(kind, a.p)};
    cfg.restarts = a.restarts;
    cfg.max_iters = a.iters;
    cfg.seed = a.seed;
    if (a.lu_restricted) {
        const std::string base = a.base.empty() ? "ghz" : a.base;
        cfg.lu_base = make_state(parse_state_spec(base, a.n));
    }
    err << "# decoq optimize channel=" << a.channel << " p=" << fmt(a.p) << " n=" << a.n
        << " restarts=" << a.restarts << " iters=" << a.iters
        << " lu_restricted=" << (a.lu_restricted ? 1 : 0)
        << " base=" << (a.lu_restricted ? (a.base.empty() ? "ghz" : a.base) : "-")
        << " seed=" << a.seed << " out=" << a.out << "\n";

    const SearchResult result = search(cfg);
    save_state(result.best_state, a.out);

    const std::string trajectory_path = a.out + ".trajectory";
    std::ofstream trajectory(trajectory_path);
    if (!trajectory) throw std::runtime_error("cannot open " + trajectory_path + " for writing");
    for (const auto& [iter, value] : result.trajectory) {
        trajectory << iter << " " << fmt_full(value) << "\n";
    }
    if (!trajectory) throw std::runtime_error("error writing " + trajectory_path);

    err << "best restart " << result.restart_index << ": evolved E = "
        << fmt_full(result.evolved_score) << ", initial E = " << fmt_full(result.initial_score)
        << "\n"
        << "state written to " << a.out << ", trajectory to " << trajectory_path << "\n";
}

void run_bound(const BoundArgs& a, std::ostream& err) {
    const ChannelKind kind = channel_kind_from_string(a.channel);
    const PureState psi = make_state(parse_state_spec(a.state, a.n));
    err << "# decoq bound channel=" << a.channel << " state=" << a.state << " n=" << a.n
        << " threshold=" << fmt(a.threshold) << " seed=" << a.seed << " out=" << a.out << "\n";
    const std::vector<double> grid = make_grid(0.0, 1.0, 101);
    const BoundWindow window = bound_scan(psi, kind, grid, a.threshold);

    std::ofstream out_file(a.out);
    if (!out_file) throw std::runtime_error("cannot open " + a.out + " for writing");
    out_file << "p_unbalanced_vanish " << fmt_full(window.p_unbalanced_vanish) << "\n"
             << "p_balanced_vanish " << fmt_full(window.p_balanced_vanish) << "\n"
             << "unbalanced_vanished " << (window.unbalanced_vanished ? 1 : 0) << "\n"
             << "balanced_vanished " << (window.balanced_vanished ? 1 : 0) << "\n"
             << "orientation " << to_string(window.orientation) << "\n";
    if (!out_file) throw std::runtime_error("error writing " + a.out);
    err << "orientation: " << to_string(window.orientation) << "\n";
}

void run_survey(const SurveyArgs& a, std::ostream& err) {
    const ChannelKind kind = channel_kind_from_string(a.channel);
    const PureState base = make_state(parse_state_spec(a.base, a.n));
    err << "# decoq survey base=" << a.base << " channel=" << a.channel << " n=" << a.n
        << " samples=" << a.samples << " seed=" << a.seed << " out=" << a.out << "\n";
    const std::vector<double> grid = make_grid(0.0, 1.0, 101);
    const LuSurvey survey = lu_survey(base, kind, grid, a.samples, a.seed);

    std::ofstream out_file(a.out);
    if (!out_file) throw std::runtime_error("cannot open " + a.out + " for writing");
    std::string header = "p,env_min,env_max";
    for (int s = 0; s < a.samples; ++s) header += ",sample" + std::to_string(s);
    out_file << header << "\n";
    for (std::size_t i = 0; i < survey.grid.size(); ++i) {
        out_file << fmt_full(survey.grid[i]) << ',' << fmt_full(survey.envelope_min[i]) << ','
                 << fmt_full(survey.envelope_max[i]);
        for (const std::vector<double>& curve : survey.curves) {
            out_file << ',' << fmt_full(curve[i]);
        }
        out_file << "\n";
    }
    if (!out_file) throw std::runtime_error("error writing " + a.out);
    err << "wrote " << survey.grid.size() << " rows to " << a.out << "\n";
}

void run_bipartitions(int n, std::ostream& out, std::ostream& err) {
    err << "# decoq bipartitions n=" << n << "\n";
    out << "n " << n << "\n";
    for (int m = 1; 2 * m <= n; ++m) {
        out << "m=" << m << " " << enumerate_bipartitions(n, m).size() << "\n";
    }
    out << "total " << n_cuts(n) << "\n";
}

void run_state(const StateArgs& a, std::ostream& err) {
    err << "# decoq state family=" << a.family << " n=" << a.n << " out=" << a.out << "\n";
    save_state(make_state(parse_state_spec(a.family, a.n)), a.out);
    err << "state written to " << a.out << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"N-qubit decoherence, entanglement decay, and robust-state search"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Entanglement decay along a noise-strength grid");
    sweep_cmd->add_option("--channel", sweep_args.channel, "Channel: pd, dep, bf, pf, bpf")
        ->required();
    sweep_cmd->add_option("--state", sweep_args.state, "State: ghz, w, hs, rob5, h, hbar, file:<path>")
        ->required();
    sweep_cmd->add_option("--n", sweep_args.n, "Number of qubits")->required();
    sweep_cmd->add_option("--pmin", sweep_args.pmin, "Grid start")->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--pmax", sweep_args.pmax, "Grid end")->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--steps", sweep_args.steps, "Grid points")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--per-cut", sweep_args.per_cut, "Emit one column per bipartition");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Random seed (unused, echoed)");
    sweep_cmd->add_option("--out", sweep_args.out, "Output CSV path")->required();

    OptimizeArgs optimize_args;
    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Search for the most decoherence-robust initial state");
    optimize_cmd->add_option("--channel", optimize_args.channel, "Channel: pd, dep, bf, pf, bpf")
        ->required();
    optimize_cmd->add_option("--p", optimize_args.p, "Channel strength the objective evolves to")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    optimize_cmd->add_option("--n", optimize_args.n, "Number of qubits")->required();
    optimize_cmd->add_option("--restarts", optimize_args.restarts, "Independent restarts")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--iters", optimize_args.iters, "Iteration cap per restart")
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--seed", optimize_args.seed, "Random seed");
    optimize_cmd->add_flag("--lu-restricted", optimize_args.lu_restricted,
                           "Search only the local-unitary orbit of --base");
    optimize_cmd->add_option("--base", optimize_args.base,
                             "Base state for --lu-restricted (default ghz)");
    optimize_cmd->add_option("--out", optimize_args.out, "Output state-file path")->required();

    BoundArgs bound_args;
    CLI::App* bound_cmd = app.add_subcommand(
        "bound", "Locate where the extreme bipartition classes lose entanglement");
    bound_cmd->add_option("--channel", bound_args.channel, "Channel: pd, dep, bf, pf, bpf")
        ->required();
    bound_cmd->add_option("--state", bound_args.state, "State: ghz, w, hs, rob5, h, hbar, file:<path>")
        ->required();
    bound_cmd->add_option("--n", bound_args.n, "Number of qubits")->required();
    bound_cmd->add_option("--threshold", bound_args.threshold, "Vanishing threshold")
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--seed", bound_args.seed, "Random seed (unused, echoed)");
    bound_cmd->add_option("--out", bound_args.out, "Output report path")->required();

    SurveyArgs survey_args;
    CLI::App* survey_cmd = app.add_subcommand(
        "survey", "Decay curves of random local-unitary variants of a base state");
    survey_cmd->add_option("--base", survey_args.base, "Base state family")->required();
    survey_cmd->add_option("--channel", survey_args.channel, "Channel: pd, dep, bf, pf, bpf")
        ->required();
    survey_cmd->add_option("--n", survey_args.n, "Number of qubits")->required();
    survey_cmd->add_option("--samples", survey_args.samples, "Number of variants")
        ->check(CLI::PositiveNumber);
    survey_cmd->add_option("--seed", survey_args.seed, "Random seed")->required();
    survey_cmd->add_option("--out", survey_args.out, "Output CSV path")->required();

    int bipartitions_n = 0;
    CLI::App* bipartitions_cmd =
        app.add_subcommand("bipartitions", "Print the nonequivalent bipartition counts");
    bipartitions_cmd->add_option("--n", bipartitions_n, "Number of qubits")->required();

    StateArgs state_args;
    CLI::App* state_cmd = app.add_subcommand("state", "Write a catalog state to a file");
    state_cmd->add_option("--family", state_args.family, "ghz, w, hs, rob5, h, hbar")->required();
    state_cmd->add_option("--n", state_args.n, "Number of qubits")->required();
    state_cmd->add_option("--out", state_args.out, "Output state-file path")->required();

    std::vector<std::string> argv_storage{"decoq"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (sweep_cmd->parsed()) run_sweep(sweep_args, err);
        else if (optimize_cmd->parsed()) run_optimize(optimize_args, err);
        else if (bound_cmd->parsed()) run_bound(bound_args, err);
        else if (survey_cmd->parsed()) run_survey(survey_args, err);
        else if (bipartitions_cmd->parsed()) run_bipartitions(bipartitions_n, out, err);
        else if (state_cmd->parsed()) run_state(state_args, err);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace decoq
