// Copyright 2026 The ptsim Authors
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

#include <random>

#include "ptsim/linalg.hpp"
#include "ptsim/pt_model.hpp"

namespace ptsim::testing {

inline Op2 random_op2(std::mt19937_64& rng, double bound = 2.0) {
    std::uniform_real_distribution<double> u(-bound, bound);
    Op2 m;
    for (auto& x : m.data) x = Complex{u(rng), u(rng)};
    return m;
}

inline Ket2 random_unit_ket(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Ket2 k{{Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)}}};
    return Complex{1.0 / norm(k)} * k;
}

inline Density2 random_mixed_state(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> len(0.0, 1.0);
    double x = g(rng), y = g(rng), z = g(rng);
    const double scale = len(rng) / std::sqrt(x * x + y * y + z * z);
    x *= scale;
    y *= scale;
    z *= scale;
    Op2 m;
    m(0, 0) = 0.5 * (1 + z);
    m(1, 1) = 0.5 * (1 - z);
    m(0, 1) = Complex{0.5 * x, -0.5 * y};
    m(1, 0) = Complex{0.5 * x, 0.5 * y};
    return Density2(m);
}

/// Parameters with omega^2 >= min_omega_sq.
inline PTParams random_unbroken(std::mt19937_64& rng, double min_omega_sq = 1e-2) {
    std::uniform_real_distribution<double> mag(0.1, 3.0);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    std::bernoulli_distribution flip;
    for (;;) {
        PTParams p;
        p.r = mag(rng);
        p.theta = ang(rng);
        p.s = mag(rng);
        p.mu = mag(rng);
        if (flip(rng)) {
            p.s = -p.s;
            p.mu = -p.mu;
        }
        if (derive(p).omega_sq >= min_omega_sq) return p;
    }
}

inline PTParams random_broken(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.1, 3.0);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    for (;;) {
        PTParams p{mag(rng), mag(rng), mag(rng), ang(rng), 1.0};
        if (derive(p).omega_sq <= -1e-2) return p;
    }
}

inline PTParams paper_params() { return PTParams{2.0, 1.0, 1.0, M_PI / 8.0, 1.0}; }

}  // namespace ptsim::testing
