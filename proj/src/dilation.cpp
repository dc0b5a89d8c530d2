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

#include "ptsim/dilation.hpp"

#include <cmath>
#include <limits>

namespace ptsim {

namespace {

constexpr double kPostselectThreshold = 1e-14;

Op4 block_diag(const Op2& upper, const Op2& lower) {
    Op4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = upper(i, j);
            out(2 + i, 2 + j) = lower(i, j);
        }
    return out;
}

}  // namespace

Op4 DilationCircuit::unitary() const { return u4 * cu3 * cu2 * u1; }

DilationAngles angles(const PTParams& p, double t) {
    p.validate();
    const PTDerived d = derive(p);
    const HalfAngle h = half_angle(d.omega_sq, t / p.hbar);
    const double cos_half = h.cos_half;
    const double sin_half = h.sin_half_over_omega;

    const double sum = p.mu + p.s;
    const double gain = 2.0 * p.r * std::sin(p.theta);
    const double q = std::hypot(p.mu - p.s, gain);

    // Full denominator = omega^2 * reduced.
    const double branch0 = cos_half * cos_half + sum * sum * sin_half * sin_half;
    const double reduced = branch0 + q * q * sin_half * sin_half;
    if (!std::isfinite(reduced) || !(reduced > std::numeric_limits<double>::min()))
        throw DegenerateDenominator("dilation denominator vanishes or overflows at t = " + std::to_string(t));

    const double root = std::sqrt(reduced);
    DilationAngles a;
    a.theta_a = std::atan2(q * sin_half / root, std::sqrt(branch0 / reduced));
    a.theta_w1 = std::atan2(-sum * sin_half, cos_half);
    // q = 0 leaves theta_w2 undetermined, but then sin(theta_a) = 0 and U3 never contributes.
    a.theta_w2 = q > 0.0 ? std::atan2(-(p.mu - p.s), gain) : 0.0;
    a.c = std::polar(1.0 / root, t * p.r * std::cos(p.theta) / p.hbar);
    return a;
}

Op2 u2_matrix(double theta_w1) {
    const double c = std::cos(theta_w1);
    const double s = std::sin(theta_w1);
    Op2 m;
    m(0, 0) = c;
    m(0, 1) = Complex{0.0, s};
    m(1, 0) = Complex{0.0, s};
    m(1, 1) = c;
    return m;
}

Op2 u3_matrix(double theta_w2) {
    const double c = std::cos(theta_w2);
    const double s = std::sin(theta_w2);
    Op2 m;
    m(0, 0) = c;
    m(0, 1) = Complex{0.0, -s};
    m(1, 0) = Complex{0.0, s};
    m(1, 1) = -c;
    return m;
}

DilationCircuit build_circuit(const DilationAngles& a) {
    const double c = std::cos(a.theta_a);
    const double s = std::sin(a.theta_a);
    Op2 rotation;
    rotation(0, 0) = c;
    rotation(0, 1) = -s;
    rotation(1, 0) = s;
    rotation(1, 1) = c;

    const double h = 1.0 / std::sqrt(2.0);
    Op2 hadamard;
    hadamard(0, 0) = h;
    hadamard(0, 1) = h;
    hadamard(1, 0) = h;
    hadamard(1, 1) = -h;

    DilationCircuit circuit;
    circuit.u1 = kron2(rotation, Op2::identity());
    circuit.cu2 = block_diag(u2_matrix(a.theta_w1), Op2::identity());
    circuit.cu3 = block_diag(Op2::identity(), u3_matrix(a.theta_w2));
    circuit.u4 = kron2(hadamard, Op2::identity());
    return circuit;
}

Ket4 run_circuit(const PTParams& p, double t, const Ket2& psi_w) {
    if (std::abs(norm(psi_w) - 1.0) > 1e-12) throw InvalidArgument("run_circuit: input ket must be normalized");
    const DilationCircuit circuit = build_circuit(angles(p, t));
    Ket4 state;
    state[0] = psi_w[0];
    state[1] = psi_w[1];
    return circuit.u4 * (circuit.cu3 * (circuit.cu2 * (circuit.u1 * state)));
}

std::pair<Ket2, double> postselect(const Ket4& phi) {
    Ket2 branch{{phi[0], phi[1]}};
    const double n = norm(branch);
    if (!(n > kPostselectThreshold)) throw PostselectionImpossible("ancilla |0> component is empty");
    return {Complex{1.0 / n} * branch, n * n};
}

double lcu_residual(const PTParams& p, double t) {
    const DilationAngles a = angles(p, t);
    const Op2 lhs = Complex{std::cos(a.theta_a)} * u2_matrix(a.theta_w1) +
                    Complex{std::sin(a.theta_a)} * u3_matrix(a.theta_w2);
    const Op2 rhs = a.c * expm2_closed(h_pt(p), Complex{0.0, -t / p.hbar});
    return frobenius_norm(lhs - rhs);
}

double success_probability(const PTParams& p, double t, const Ket2& psi_w) {
    return postselect(run_circuit(p, t, psi_w)).second;
}

}  // namespace ptsim
