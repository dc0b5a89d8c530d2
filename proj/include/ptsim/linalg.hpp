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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptsim {

using Complex = std::complex<double>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an input violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Dense N x N complex matrix, row-major. Small and trivially copyable.
template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> data{};

    constexpr Complex& operator()(std::size_t row, std::size_t col) { return data[row * N + col]; }
    constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
        return data[row * N + col];
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix zero() { return Matrix{}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Complex column vector of length N. Norm is not constrained.
template <std::size_t N>
struct Vector {
    std::array<Complex, N> amp{};

    constexpr Complex& operator[](std::size_t i) { return amp[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return amp[i]; }

    friend bool operator==(const Vector&, const Vector&) = default;
};

// Two-qubit operators use the basis order |a w> = |00>, |01>, |10>, |11>:
// the ancilla is the most significant qubit.
using Op2 = Matrix<2>;
using Op4 = Matrix<4>;
using Ket2 = Vector<2>;
using Ket4 = Vector<4>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& a, const Matrix<N>& b) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& a, const Vector<N>& v) {
    Vector<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    return out;
}

template <std::size_t N>
Matrix<N> operator+(Matrix<N> a, const Matrix<N>& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.data[i] += b.data[i];
    return a;
}

template <std::size_t N>
Matrix<N> operator-(Matrix<N> a, const Matrix<N>& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.data[i] -= b.data[i];
    return a;
}

template <std::size_t N>
Matrix<N> operator*(Complex s, Matrix<N> a) {
    for (auto& x : a.data) x *= s;
    return a;
}

template <std::size_t N>
Vector<N> operator*(Complex s, Vector<N> v) {
    for (auto& x : v.amp) x *= s;
    return v;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& a) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

template <std::size_t N>
Complex trace(const Matrix<N>& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += a(i, i);
    return t;
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
    double s = 0.0;
    for (const auto& x : a.data) s += std::norm(x);
    return std::sqrt(s);
}

template <std::size_t N>
double norm(const Vector<N>& v) {
    double s = 0.0;
    for (const auto& x : v.amp) s += std::norm(x);
    return std::sqrt(s);
}

template <std::size_t N>
bool is_finite(const Matrix<N>& a) {
    for (const auto& x : a.data)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

template <std::size_t N>
bool is_finite(const Vector<N>& v) {
    for (const auto& x : v.amp)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

/// Frobenius norm of a†a - I.
template <std::size_t N>
double unitarity_defect(const Matrix<N>& a) {
    return frobenius_norm(adjoint(a) * a - Matrix<N>::identity());
}

/// Distance between two operators modulo a global phase:
/// min over phi of ||a - e^{i phi} b||_F.
template <std::size_t N>
double phase_invariant_distance(const Matrix<N>& a, const Matrix<N>& b) {
    const Complex overlap = trace(adjoint(b) * a);
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
    return frobenius_norm(a - phase * b);
}

namespace pauli {
Op2 x();
Op2 y();
Op2 z();
}  // namespace pauli

/// Validated single-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite, each within kDensityTolerance.
class Density2 {
public:
    static constexpr double kDensityTolerance = 1e-12;

    /// Throws InvalidArgument if `m` is not a physical state.
    explicit Density2(const Op2& m);

    /// Projector onto ket/||ket||. Throws InvalidArgument for a zero ket.
    static Density2 pure(const Ket2& ket);

    const Op2& matrix() const { return m_; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

    /// Tr(rho^2).
    double purity() const;

    /// Eigenvalues in ascending order.
    std::array<double, 2> eigenvalues() const;

private:
    Op2 m_;
};

/// Returns a description of the first violated invariant, or an empty string.
std::string density_violation(const Op2& m, double tol = Density2::kDensityTolerance);

/// e^{scale * m} by trace splitting and the closed form for traceless 2x2 matrices.
Op2 expm2_closed(const Op2& m, Complex scale);

/// e^{scale * m} by scaling and squaring with a truncated Taylor series.
/// Independent of expm2_closed; used as an oracle. Requires tol > 0.
Op2 expm2_taylor(const Op2& m, Complex scale, double tol = 1e-14);

/// Kronecker product a (x) b with `a` acting on the ancilla (left factor).
Op4 kron2(const Op2& a, const Op2& b);

/// Reduced work-qubit state of phi/||phi||. Throws InvalidArgument on zero norm.
Density2 partial_trace_ancilla(const Ket4& phi);

/// Tr(ab) / (sqrt(Tr a^2) sqrt(Tr b^2)).
double fidelity_paper(const Density2& a, const Density2& b);

/// Mean entrywise complex modulus of a - b.
double avg_abs_diff(const Density2& a, const Density2& b);

}  // namespace ptsim
