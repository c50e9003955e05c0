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

#include "decoq/states.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "decoq/rng.hpp"

namespace decoq {

namespace {

void require_register_size(int n, const char* what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) + " requires at least 2 qubits, got " +
                                    std::to_string(n));
    }
    if (n > kMaxQubits) {
        throw std::invalid_argument(std::string(what) + " with " + std::to_string(n) +
                                    " qubits exceeds the " + std::to_string(kMaxQubits) +
                                    "-qubit cap");
    }
}

}  // namespace

PureState make_ghz(int n) {
    require_register_size(n, "GHZ");
    std::vector<complexd> amps(std::size_t{1} << n);
    const double a = 1.0 / std::numbers::sqrt2;
    amps.front() = a;
    amps.back() = a;
    return PureState(n, std::move(amps));
}

PureState make_w(int n) {
    require_register_size(n, "W");
    std::vector<complexd> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int q = 0; q < n; ++q) {
        amps[static_cast<std::size_t>(1) << q] = a;
    }
    return PureState(n, std::move(amps));
}

PureState make_hs() {
    const double a = 1.0 / std::sqrt(6.0);
    const complexd omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const complexd omega2 = std::conj(omega);
    std::vector<complexd> amps(16);
    amps[12] = a;          // |1100>
    amps[3] = a;           // |0011>
    amps[9] = omega * a;   // |1001>
    amps[6] = omega * a;   // |0110>
    amps[10] = omega2 * a; // |1010>
    amps[5] = omega2 * a;  // |0101>
    return PureState(4, std::move(amps));
}

PureState make_rob5() {
    std::vector<complexd> amps(32);
    const double a = 0.25;
    for (int i : {6, 10, 17, 18}) amps[static_cast<std::size_t>(i)] = a;
    for (int i : {5, 9, 29, 30}) amps[static_cast<std::size_t>(i)] = -a;
    for (int i : {3, 15, 24, 27}) amps[static_cast<std::size_t>(i)] = complexd(0.0, a);
    for (int i : {0, 12, 20, 23}) amps[static_cast<std::size_t>(i)] = complexd(0.0, -a);
    return PureState(5, std::move(amps));
}

namespace {

// One recurrence step prepends a qubit: the |0> branch keeps the previous
// pair ordering, the |1> branch swaps it.
void h_recurrence_step(std::vector<complexd>& h, std::vector<complexd>& hbar) {
    const std::size_t half = h.size();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::vector<complexd> next_h(2 * half), next_hbar(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        next_h[i] = h[i] * inv_sqrt2;
        next_h[half + i] = hbar[i] * inv_sqrt2;
        next_hbar[i] = hbar[i] * inv_sqrt2;
        next_hbar[half + i] = h[i] * inv_sqrt2;
    }
    h = std::move(next_h);
    hbar = std::move(next_hbar);
}

std::pair<std::vector<complexd>, std::vector<complexd>> h_pair(int n) {
    const double a = 1.0 / std::numbers::sqrt2;
    std::vector<complexd> h(4), hbar(4);
    h[0] = a;
    h[3] = a;
    hbar[1] = a;
    hbar[2] = a;
    for (int k = 3; k <= n; ++k) h_recurrence_step(h, hbar);
    return {std::move(h), std::move(hbar)};
}

}  // namespace

PureState make_h(int n) {
    require_register_size(n, "H");
    return PureState(n, h_pair(n).first);
}

PureState make_hbar(int n) {
    require_register_size(n, "HBar");
    return PureState(n, h_pair(n).second);
}

PureState haar_random_state(int n, Rng& rng) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("random state needs 1 to " + std::to_string(kMaxQubits) +
                                    " qubits, got " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    while (true) {
        std::vector<complexd> amps(dim);
        double norm_sq = 0.0;
        for (complexd& a : amps) {
            a = rng.complex_normal();
            norm_sq += std::norm(a);
        }
        if (norm_sq < 1e-24) continue;
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (complexd& a : amps) a *= inv;
        return PureState(n, std::move(amps));
    }
}

PureState apply_local_unitaries(const PureState& psi, std::span<const ComplexMatrix> us) {
    const int n = psi.n_qubits();
    if (static_cast<int>(us.size()) != n) {
        throw std::invalid_argument("apply_local_unitaries: got " + std::to_string(us.size()) +
                                    " unitaries for " + std::to_string(n) + " qubits");
    }
    std::vector<complexd> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    const int dim = psi.dim();
    for (int q = 0; q < n; ++q) {
        const ComplexMatrix& u = us[static_cast<std::size_t>(q)];
        if (u.dim() != 2) {
            throw std::invalid_argument("apply_local_unitaries: unitary for qubit " +
                                        std::to_string(q) + " is not 2x2");
        }
        const int bit = qubit_bit(n, q);
        for (int i = 0; i < dim; ++i) {
            if ((i & bit) != 0) continue;
            const complexd a0 = amps[static_cast<std::size_t>(i)];
            const complexd a1 = amps[static_cast<std::size_t>(i | bit)];
            amps[static_cast<std::size_t>(i)] = u(0, 0) * a0 + u(0, 1) * a1;
            amps[static_cast<std::size_t>(i | bit)] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    return PureState(n, std::move(amps));
}

PureState random_local_unitary_state(const PureState& base, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ComplexMatrix> us;
    us.reserve(static_cast<std::size_t>(base.n_qubits()));
    for (int q = 0; q < base.n_qubits(); ++q) us.push_back(rng.haar_unitary2());
    return apply_local_unitaries(base, us);
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int qubits_for_dim(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    return n;
}

PureState finish_load(int n, std::vector<complexd> amps, const std::string& path) {
    double norm_sq = 0.0;
    for (const complexd& a : amps) norm_sq += std::norm(a);
    const double norm = std::sqrt(norm_sq);
    if (std::abs(norm - 1.0) >= 1e-6) {
        throw std::invalid_argument(path + ": state norm " + std::to_string(norm) +
                                    " deviates from 1 by 1e-6 or more");
    }
    const double inv = 1.0 / norm;
    for (complexd& a : amps) a *= inv;
    return PureState(n, std::move(amps));
}

}  // namespace

PureState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file " + path);

    struct Line {
        int number;
        std::string text;
    };
    std::vector<Line> lines;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') continue;
        lines.push_back({line_no, raw});
    }
    if (in.bad()) throw std::runtime_error("error reading state file " + path);
    if (lines.empty()) throw std::invalid_argument(path + ": empty state file");

    auto malformed = [&path](int number) {
        return std::invalid_argument(path + ": malformed line " + std::to_string(number));
    };

    std::istringstream first(lines.front().text);
    std::string keyword;
    first >> keyword;
    if (keyword == "nqubits") {
        int n = 0;
        std::string extra;
        if (!(first >> n) || (first >> extra)) throw malformed(lines.front().number);
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument(path + ": nqubits " + std::to_string(n) +
                                        " outside [1, " + std::to_string(kMaxQubits) + "]");
        }
        const std::size_t dim = std::size_t{1} << n;
        std::vector<complexd> amps(dim);
        std::vector<bool> seen(dim, false);
        for (std::size_t k = 1; k < lines.size(); ++k) {
            std::istringstream ls(lines[k].text);
            long long index = 0;
            double re = 0.0, im = 0.0;
            std::string extra2;
            if (!(ls >> index >> re >> im) || (ls >> extra2)) throw malformed(lines[k].number);
            if (index < 0 || index >= static_cast<long long>(dim)) {
                throw std::invalid_argument(path + ": amplitude index " + std::to_string(index) +
                                            " out of range on line " +
                                            std::to_string(lines[k].number));
            }
            const auto i = static_cast<std::size_t>(index);
            if (seen[i]) {
                throw std::invalid_argument(path + ": duplicate amplitude index " +
                                            std::to_string(index) + " on line " +
                                            std::to_string(lines[k].number));
            }
            seen[i] = true;
            amps[i] = complexd(re, im);
        }
        return finish_load(n, std::move(amps), path);
    }

    // Headerless fallback: a dense `<re> <im>` list, one amplitude per line.
    std::vector<complexd> amps;
    amps.reserve(lines.size());
    for (const Line& line : lines) {
        std::istringstream ls(line.text);
        double re = 0.0, im = 0.0;
        std::string extra;
        if (!(ls >> re >> im) || (ls >> extra)) throw malformed(line.number);
        amps.emplace_back(re, im);
    }
    if (!is_power_of_two(amps.size())) {
        throw std::invalid_argument(path + ": amplitude count " + std::to_string(amps.size()) +
                                    " is not a power of two");
    }
    const int n = qubits_for_dim(amps.size());
    if (n > kMaxQubits) {
        throw std::invalid_argument(path + ": state exceeds the " + std::to_string(kMaxQubits) +
                                    "-qubit cap");
    }
    return finish_load(n, std::move(amps), path);
}

void save_state(const PureState& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "nqubits " << psi.n_qubits() << "\n";
    char buf[128];
    for (int i = 0; i < psi.dim(); ++i) {
        const complexd a = psi.amplitude(i);
        if (a == complexd{}) continue;
        std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", i, a.real(), a.imag());
        out << buf;
    }
    if (!out) throw std::runtime_error("error writing state file " + path);
}

std::string to_string(StateFamily family) {
    switch (family) {
        case StateFamily::GHZ: return "ghz";
        case StateFamily::W: return "w";
        case StateFamily::HS: return "hs";
        case StateFamily::Rob5: return "rob5";
        case StateFamily::H: return "h";
        case StateFamily::HBar: return "hbar";
        case StateFamily::File: return "file";
    }
    throw std::invalid_argument("to_string: unknown state family");
}

StateSpec parse_state_spec(std::string_view token, int n_qubits) {
    if (token.rfind("file:", 0) == 0) {
        const std::string path(token.substr(5));
        if (path.empty()) throw std::invalid_argument("file: state token has an empty path");
        return StateSpec{StateFamily::File, n_qubits, path};
    }
    StateFamily family;
    if (token == "ghz") family = StateFamily::GHZ;
    else if (token == "w") family = StateFamily::W;
    else if (token == "hs") family = StateFamily::HS;
    else if (token == "rob5") family = StateFamily::Rob5;
    else if (token == "h") family = StateFamily::H;
    else if (token == "hbar") family = StateFamily::HBar;
    else {
        throw std::invalid_argument("unknown state '" + std::string(token) +
                                    "' (expected ghz, w, hs, rob5, h, hbar, or file:<path>)");
    }
    if (family == StateFamily::HS && n_qubits != 4) {
        throw std::invalid_argument("hs is a 4-qubit state; got n=" + std::to_string(n_qubits));
    }
    if (family == StateFamily::Rob5 && n_qubits != 5) {
        throw std::invalid_argument("rob5 is a 5-qubit state; got n=" + std::to_string(n_qubits));
    }
    return StateSpec{family, n_qubits, std::nullopt};
}

PureState make_state(const StateSpec& spec) {
    switch (spec.family) {
        case StateFamily::GHZ: return make_ghz(spec.n_qubits);
        case StateFamily::W: return make_w(spec.n_qubits);
        case StateFamily::HS:
            if (spec.n_qubits != 4) {
                throw std::invalid_argument("hs is a 4-qubit state; got n=" +
                                            std::to_string(spec.n_qubits));
            }
            return make_hs();
        case StateFamily::Rob5:
            if (spec.n_qubits != 5) {
                throw std::invalid_argument("rob5 is a 5-qubit state; got n=" +
                                            std::to_string(spec.n_qubits));
            }
            return make_rob5();
        case StateFamily::H: return make_h(spec.n_qubits);
        case StateFamily::HBar: return make_hbar(spec.n_qubits);
        case StateFamily::File: {
            if (!spec.path) throw std::invalid_argument("file state without a path");
            PureState psi = load_state(*spec.path);
            if (spec.n_qubits > 0 && psi.n_qubits() != spec.n_qubits) {
                throw std::invalid_argument(*spec.path + " holds a " +
                                            std::to_string(psi.n_qubits()) +
                                            "-qubit state but n=" +
                                            std::to_string(spec.n_qubits) + " was requested");
            }
            return psi;
        }
    }
    throw std::invalid_argument("make_state: unknown state family");
}

}  // namespace decoq
