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

#include "ptsim/pt_model.hpp"

#include <cmath>

namespace ptsim {

void PTParams::validate() const {
    if (!std::isfinite(r) || !std::isfinite(s) || !std::isfinite(mu) || !std::isfinite(theta) ||
        !std::isfinite(hbar))
        throw InvalidArgument("PTParams: all fields must be finite");
    if (!(hbar > 0.0)) throw InvalidArgument("PTParams: hbar must be positive");
}

const char* to_string(PTPhase phase) {
    switch (phase) {
        case PTPhase::Unbroken: return "unbroken";
        case PTPhase::Broken: return "broken";
        case PTPhase::Exceptional: return "exceptional";
    }
    return "?";
}

Op2 h_pt(const PTParams& p) {
    Op2 h;
    h(0, 0) = std::polar(p.r, p.theta);
    h(0, 1) = p.s;
    h(1, 0) = p.mu;
    h(1, 1) = std::polar(p.r, -p.theta);
    return h;
}

PTDerived derive(const PTParams& p, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("derive: tol must be positive");
    const double gain = p.r * std::sin(p.theta);
    PTDerived d;
    d.omega_sq = 4.0 * (p.s * p.mu - gain * gain);
    d.omega = 2.0 * std::sqrt(Complex{p.s * p.mu - gain * gain, 0.0});
    if (d.omega_sq > tol)
        d.phase = PTPhase::Unbroken;
    else if (d.omega_sq < -tol)
        d.phase = PTPhase::Broken;
    else
        d.phase = PTPhase::Exceptional;
    return d;
}

HalfAngle half_angle(double omega_sq, double t_over_hbar) {
    const double half_t = 0.5 * t_over_hbar;
    const double u = omega_sq * half_t * half_t;  // (omega t / 2 hbar)^2
    HalfAngle h;
    double sinc = 1.0;
    if (std::abs(u) < 1e-8) {
        h.cos_half = 1.0 - u / 2.0 + u * u / 24.0;
        sinc = 1.0 - u / 6.0 + u * u / 120.0;
    } else if (u > 0.0) {
        const double x = std::sqrt(u);
        h.cos_half = std::cos(x);
        sinc = std::sin(x) / x;
    } else {
        const double x = std::sqrt(-u);
        h.cos_half = std::cosh(x);
        sinc = std::sinh(x) / x;
    }
    h.sin_half_over_omega = half_t * sinc;
    return h;
}

Ket2 evolve(const PTParams& p, double t, const Ket2& psi) {
    return expm2_closed(h_pt(p), Complex{0.0, -t / p.hbar}) * psi;
}

double p0(const PTParams& p, double t) {
    const Ket2 out = evolve(p, t, Ket2{{1.0, 0.0}});
    const double n2 = std::norm(out[0]) + std::norm(out[1]);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw InvalidArgument("p0: evolved state has zero or non-finite norm");
    return std::norm(out[0]) / n2;
}

Density2 rho_theory(const PTParams& p, double t) {
    return Density2::pure(evolve(p, t, Ket2{{1.0, 0.0}}));
}

}  // namespace ptsim
