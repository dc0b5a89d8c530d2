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

#include "ptsim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ptsim {

namespace pauli {
Op2 x() {
    Op2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}
Op2 y() {
    Op2 m;
    m(0, 1) = Complex{0.0, -1.0};
    m(1, 0) = Complex{0.0, 1.0};
    return m;
}
Op2 z() {
    Op2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}
}  // namespace pauli

std::string density_violation(const Op2& m, double tol) {
    if (!is_finite(m)) return "non-finite entry";
    if (std::abs(m(0, 1) - std::conj(m(1, 0))) > tol || std::abs(m(0, 0).imag()) > tol ||
        std::abs(m(1, 1).imag()) > tol)
        return "not Hermitian";
    const double tr = (m(0, 0) + m(1, 1)).real();
    if (std::abs(tr - 1.0) > tol) return "trace " + std::to_string(tr) + " != 1";
    const double mean = 0.5 * tr;
    const double half_gap = 0.5 * (m(0, 0) - m(1, 1)).real();
    const double radius = std::hypot(half_gap, std::abs(m(0, 1)));
    if (mean - radius < -tol) return "negative eigenvalue " + std::to_string(mean - radius);
    return {};
}

Density2::Density2(const Op2& m) : m_(m) {
    if (auto why = density_violation(m); !why.empty())
        throw InvalidArgument("not a valid density matrix: " + why);
}

Density2 Density2::pure(const Ket2& ket) {
    const double n = norm(ket);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("cannot form a state from a zero-norm ket");
    const Complex a = ket[0] / n;
    const Complex b = ket[1] / n;
    Op2 m;
    m(0, 0) = std::norm(a);
    m(1, 1) = std::norm(b);
    m(0, 1) = a * std::conj(b);
    m(1, 0) = std::conj(m(0, 1));
    return Density2(m);
}

double Density2::purity() const {
    return std::norm(m_(0, 0)) + std::norm(m_(1, 1)) + 2.0 * std::norm(m_(0, 1));
}

std::array<double, 2> Density2::eigenvalues() const {
    const double mean = 0.5 * (m_(0, 0) + m_(1, 1)).real();
    const double radius = std::hypot(0.5 * (m_(0, 0) - m_(1, 1)).real(), std::abs(m_(0, 1)));
    return {mean - radius, mean + radius};
}

Op2 expm2_closed(const Op2& m, Complex scale) {
    const Complex mean = 0.5 * (m(0, 0) + m(1, 1));
    Op2 traceless = m;
    traceless(0, 0) -= mean;
    traceless(1, 1) -= mean;

    // traceless^2 = (a^2 + bc) I, so exp(scale*traceless) only needs the even
    // functions cosh(sqrt(z)) and sinh(sqrt(z))/sqrt(z) of z = scale^2 (a^2 + bc).
    const Complex z = scale * scale * (traceless(0, 0) * traceless(0, 0) + traceless(0, 1) * traceless(1, 0));

    Complex cosh_part;
    Complex sinhc_part;
    if (std::abs(z) < 1e-8) {
        cosh_part = 1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0;
        sinhc_part = 1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0;
    } else {
        const Complex root = std::sqrt(z);
        cosh_part = std::cosh(root);
        sinhc_part = std::sinh(root) / root;
    }

    Op2 out = (sinhc_part * scale) * traceless;
    out(0, 0) += cosh_part;
    out(1, 1) += cosh_part;
    return std::exp(scale * mean) * out;
}

Op2 expm2_taylor(const Op2& m, Complex scale, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("expm2_taylor: tol must be positive");

    Op2 a = scale * m;
    const double a_norm = frobenius_norm(a);
    int squarings = 0;
    if (a_norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(a_norm / 0.5)));
    a = Complex{std::ldexp(1.0, -squarings)} * a;

    // Each squaring roughly doubles the relative error, so the series is cut
    // well below tol / 2^squarings.
    const double cutoff = std::min(tol, 1e-3) * std::ldexp(1.0, -squarings) * 1e-3;
    Op2 sum = Op2::identity();
    Op2 term = Op2::identity();
    for (int k = 1; k < 80; ++k) {
        term = Complex{1.0 / k} * (term * a);
        sum = sum + term;
        if (frobenius_norm(term) < cutoff) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

Op4 kron2(const Op2& a, const Op2& b) {
    Op4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Density2 partial_trace_ancilla(const Ket4& phi) {
    const double n = norm(phi);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("partial_trace_ancilla: zero-norm state");
    Op2 rho;
    for (std::size_t anc = 0; anc < 2; ++anc)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l)
                rho(k, l) += phi[2 * anc + k] * std::conj(phi[2 * anc + l]) / (n * n);
    // Remove roundoff asymmetry.
    rho(0, 0) = rho(0, 0).real();
    rho(1, 1) = rho(1, 1).real();
    rho(1, 0) = std::conj(rho(0, 1));
    return Density2(rho);
}

double fidelity_paper(const Density2& a, const Density2& b) {
    const double pa = a.purity();
    const double pb = b.purity();
    if (!(pa > 0.0) || !(pb > 0.0)) throw InvalidArgument("fidelity_paper: zero-purity input");
    const double overlap = trace(a.matrix() * b.matrix()).real();
    return overlap / (std::sqrt(pa) * std::sqrt(pb));
}

double avg_abs_diff(const Density2& a, const Density2& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::abs(a.matrix().data[i] - b.matrix().data[i]);
    return s / 4.0;
}

}  // namespace ptsim
