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

#include <utility>

#include "ptsim/linalg.hpp"
#include "ptsim/pt_model.hpp"

namespace ptsim {

/// The circuit angles make the ancilla-|0> branch vanish, so post-selection
/// can never succeed.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class PostselectionImpossible : public Error {
public:
    using Error::Error;
};

/// Circuit parameters for one (params, t) pair. All angles are real in every phase.
struct DilationAngles {
    double theta_a = 0.0;   ///< ancilla rotation (U1)
    double theta_w1 = 0.0;  ///< work-qubit rotation applied when the ancilla is |0> (U2)
    double theta_w2 = 0.0;  ///< work-qubit reflection applied when the ancilla is |1> (U3)
    Complex c{1.0, 0.0};    ///< c such that cos(theta_a) U2 + sin(theta_a) U3 = c e^{-iHt/hbar}
};

struct DilationCircuit {
    Op4 u1;
    Op4 cu2;
    Op4 cu3;
    Op4 u4;

    /// u4 * cu3 * cu2 * u1.
    Op4 unitary() const;
};

/// Computes the dilation angles.
///
/// The textbook expressions for cos/sin of each angle are ratios whose common
/// factor omega^2 vanishes at the exceptional point and turns negative in the
/// broken phase. They are evaluated here after cancelling that factor, using
/// C = cos(omega t / 2 hbar) and S = sin(omega t / 2 hbar) / omega which are
/// real everywhere. cos(theta_w1) carries the sign of C, which keeps the
/// identity exact past omega t / hbar = pi.
///
/// Throws DegenerateDenominator if the reduced denominator is zero or not finite.
DilationAngles angles(const PTParams& p, double t);

/// [[cos t, i sin t], [i sin t, cos t]].
Op2 u2_matrix(double theta_w1);
/// [[cos t, -i sin t], [i sin t, -cos t]].
Op2 u3_matrix(double theta_w2);

DilationCircuit build_circuit(const DilationAngles& a);

/// Applies the circuit to |0>_a (x) psi_w. Requires ||psi_w|| = 1 within 1e-12.
Ket4 run_circuit(const PTParams& p, double t, const Ket2& psi_w);

/// Conditions on the ancilla being |0>. Returns the normalized work-qubit ket
/// and the probability of that outcome.
std::pair<Ket2, double> postselect(const Ket4& phi);

/// ||cos(theta_a) U2 + sin(theta_a) U3 - c e^{-iHt/hbar}||_F.
double lcu_residual(const PTParams& p, double t);

/// Probability that post-selection succeeds for input psi_w.
double success_probability(const PTParams& p, double t, const Ket2& psi_w);

}  // namespace ptsim
