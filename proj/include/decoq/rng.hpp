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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "decoq/linalg.hpp"

namespace decoq {

/// Seeded random source. mt19937_64 supplies the bits; the uniform and
/// normal transforms are spelled out here so that streams do not depend on
/// the standard library's distribution implementations and a seed replays
/// the same values on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; pairs are generated together and the
    /// spare is handed out on the next call.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    complexd complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    /// Haar-distributed 2x2 unitary: Gram-Schmidt on a complex Gaussian
    /// matrix with the R-diagonal kept real positive (the phase fix that
    /// makes the Q factor Haar).
    ComplexMatrix haar_unitary2() {
        while (true) {
            const complexd g00 = complex_normal(), g10 = complex_normal();
            const complexd g01 = complex_normal(), g11 = complex_normal();
            const double n1 = std::sqrt(std::norm(g00) + std::norm(g10));
            if (n1 < 1e-12) continue;
            const complexd q00 = g00 / n1, q10 = g10 / n1;
            const complexd proj = std::conj(q00) * g01 + std::conj(q10) * g11;
            const complexd v0 = g01 - proj * q00, v1 = g11 - proj * q10;
            const double n2 = std::sqrt(std::norm(v0) + std::norm(v1));
            if (n2 < 1e-12) continue;
            ComplexMatrix u(2);
            u(0, 0) = q00;
            u(1, 0) = q10;
            u(0, 1) = v0 / n2;
            u(1, 1) = v1 / n2;
            return u;
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace decoq
