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

#include "ptsim/linalg.hpp"

namespace ptsim {

/// Parameters of the two-level PT-symmetric Hamiltonian
///   H = [[r e^{i theta}, s], [mu, r e^{-i theta}]].
/// Energies share one unit; hbar defaults to 1 so times are in units of hbar/energy.
struct PTParams {
    double r = 0.0;
    double s = 0.0;
    double mu = 0.0;
    double theta = 0.0;
    double hbar = 1.0;

    /// Throws InvalidArgument for non-finite fields or hbar <= 0.
    void validate() const;
};

enum class PTPhase { Unbroken, Broken, Exceptional };

const char* to_string(PTPhase phase);

struct PTDerived {
    /// 2 sqrt(s mu - r^2 sin^2 theta), principal branch (imaginary when broken).
    Complex omega;
    /// omega^2, always real.
    double omega_sq = 0.0;
    PTPhase phase = PTPhase::Exceptional;
};

inline constexpr double kDefaultPhaseTolerance = 1e-10;

Op2 h_pt(const PTParams& p);

PTDerived derive(const PTParams& p, double tol = kDefaultPhaseTolerance);

/// cos(omega t / 2 hbar) and sin(omega t / 2 hbar) / omega, both real for any
/// real omega^2, evaluated without branching on the phase at the exceptional point.
struct HalfAngle {
    double cos_half = 1.0;
    double sin_half_over_omega = 0.0;
};

HalfAngle half_angle(double omega_sq, double t_over_hbar);

/// Unnormalized e^{-i t H / hbar} psi.
Ket2 evolve(const PTParams& p, double t, const Ket2& psi);

/// Population of |0> in the normalized evolved state of |0>.
/// Throws InvalidArgument if the evolved state vanishes.
double p0(const PTParams& p, double t);

/// Normalized projector onto evolve(p, t, |0>).
Density2 rho_theory(const PTParams& p, double t);

}  // namespace ptsim
