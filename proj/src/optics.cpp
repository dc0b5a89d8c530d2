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

#include "ptsim/optics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multifit_nlinear.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <limits>
#include <memory>

#include "ptsim/csv.hpp"

namespace ptsim {

namespace {

constexpr double kRadPerDeg = M_PI / 180.0;
constexpr double kAcceptResidual = 1e-6;

Op2 rotation(double rad) {
    const double c = std::cos(rad), s = std::sin(rad);
    Op2 m;
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

// QWP(alpha) -> HWP(beta) -> QWP(gamma), angles in radians.
Op2 template_matrix(double alpha, double beta, double gamma) {
    const WaveplateSetting chain[] = {{PlateKind::QWP, alpha / kRadPerDeg},
                                      {PlateKind::HWP, beta / kRadPerDeg},
                                      {PlateKind::QWP, gamma / kRadPerDeg}};
    Op2 m = Op2::identity();
    for (const auto& w : chain) m = jones(w) * m;
    return m;
}

struct FitTarget {
    const Op2* target;
};

double overlap_cost(const gsl_vector* x, void* params) {
    const Op2& target = *static_cast<FitTarget*>(params)->target;
    const Op2 m = template_matrix(gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2));
    return 1.0 - std::abs(trace(adjoint(m) * target)) / 2.0;
}

int phase_residuals(const gsl_vector* x, void* params, gsl_vector* f) {
    const Op2& target = *static_cast<FitTarget*>(params)->target;
    const Op2 m = template_matrix(gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2));
    const Complex phase = std::polar(1.0, gsl_vector_get(x, 3));
    for (std::size_t i = 0; i < 4; ++i) {
        const Complex d = m.data[i] - phase * target.data[i];
        gsl_vector_set(f, 2 * i, d.real());
        gsl_vector_set(f, 2 * i + 1, d.imag());
    }
    return GSL_SUCCESS;
}

struct VectorDeleter {
    void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;

std::array<double, 3> simplex_search(const Op2& target, const std::array<double, 3>& seed_deg) {
    FitTarget data{&target};
    gsl_multimin_function fn{&overlap_cost, 3, &data};
    VectorPtr x(gsl_vector_alloc(3));
    VectorPtr step(gsl_vector_alloc(3));
    for (std::size_t i = 0; i < 3; ++i) {
        gsl_vector_set(x.get(), i, seed_deg[i] * kRadPerDeg);
        gsl_vector_set(step.get(), i, 20.0 * kRadPerDeg);
    }
    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> solver(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3), &gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());
    for (int iter = 0; iter < 2000; ++iter) {
        if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver.get()), 1e-10) == GSL_SUCCESS) break;
    }
    const gsl_vector* best = gsl_multimin_fminimizer_x(solver.get());
    return {gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_vector_get(best, 2)};
}

std::array<double, 3> least_squares_polish(const Op2& target, const std::array<double, 3>& start) {
    FitTarget data{&target};
    const Complex overlap = trace(adjoint(target) * template_matrix(start[0], start[1], start[2]));

    gsl_multifit_nlinear_fdf fdf{};
    fdf.f = &phase_residuals;
    fdf.df = nullptr;
    fdf.fvv = nullptr;
    fdf.n = 8;
    fdf.p = 4;
    fdf.params = &data;

    VectorPtr x(gsl_vector_alloc(4));
    for (std::size_t i = 0; i < 3; ++i) gsl_vector_set(x.get(), i, start[i]);
    gsl_vector_set(x.get(), 3, std::arg(overlap));

    gsl_multifit_nlinear_parameters fit_params = gsl_multifit_nlinear_default_parameters();
    std::unique_ptr<gsl_multifit_nlinear_workspace, decltype(&gsl_multifit_nlinear_free)> work(
        gsl_multifit_nlinear_alloc(gsl_multifit_nlinear_trust, &fit_params, 8, 4), &gsl_multifit_nlinear_free);
    gsl_multifit_nlinear_init(x.get(), &fdf, work.get());
    int info = 0;
    gsl_multifit_nlinear_driver(200, 1e-15, 1e-15, 0.0, nullptr, nullptr, &info, work.get());
    const gsl_vector* best = gsl_multifit_nlinear_position(work.get());
    return {gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_vector_get(best, 2)};
}

ElementChain template_chain(const std::array<double, 3>& rad) {
    return {{PlateKind::QWP, wrap_plate_angle(rad[0] / kRadPerDeg)},
            {PlateKind::HWP, wrap_plate_angle(rad[1] / kRadPerDeg)},
            {PlateKind::QWP, wrap_plate_angle(rad[2] / kRadPerDeg)}};
}

}  // namespace

void WaveplateSetting::validate() const {
    if (!std::isfinite(angle_deg) || !(angle_deg > -90.0 && angle_deg <= 90.0))
        throw InvalidArgument("waveplate angle must lie in (-90, 90] degrees");
}

double NpbsSpec::ratio() const {
    return reflectance > 0.0 ? transmittance / reflectance : std::numeric_limits<double>::infinity();
}

Op2 jones(const WaveplateSetting& w) {
    const double rad = w.angle_deg * kRadPerDeg;
    if (w.kind == PlateKind::HWP) {
        Op2 m;
        m(0, 0) = std::cos(2 * rad);
        m(0, 1) = std::sin(2 * rad);
        m(1, 0) = std::sin(2 * rad);
        m(1, 1) = -std::cos(2 * rad);
        return m;
    }
    Op2 retarder;
    retarder(0, 0) = 1.0;
    retarder(1, 1) = Complex{0.0, 1.0};
    return rotation(rad) * retarder * rotation(-rad);
}

Op2 chain_matrix(std::span<const WaveplateSetting> chain) {
    Op2 m = Op2::identity();
    for (const auto& w : chain) m = jones(w) * m;
    return m;
}

double wrap_plate_angle(double deg) {
    // Both plate types are periodic in 180 degrees.
    double wrapped = std::fmod(deg, 180.0);
    if (wrapped <= -90.0) wrapped += 180.0;
    if (wrapped > 90.0) wrapped -= 180.0;
    return wrapped;
}

NpbsSpec compile_u1(const DilationAngles& a) {
    const double c = std::cos(a.theta_a), s = std::sin(a.theta_a);
    return {c * c, s * s};
}

double u2_central_angle_deg(const DilationAngles& a) {
    // HWP(phi) sandwiched as below gives [[cos 2phi, -i sin 2phi], [-i sin 2phi, cos 2phi]],
    // i.e. U2 with theta_w1 = -2 phi. Shifting phi by 90 degrees only flips the global sign.
    double phi = -a.theta_w1 / (2.0 * kRadPerDeg);
    phi = std::fmod(phi, 90.0);
    if (phi <= -45.0) phi += 90.0;
    if (phi > 45.0) phi -= 90.0;
    return phi;
}

ElementChain compile_u2(const DilationAngles& a) {
    return {{PlateKind::HWP, 0.0},
            {PlateKind::QWP, 0.0},
            {PlateKind::HWP, u2_central_angle_deg(a)},
            {PlateKind::QWP, 0.0},
            {PlateKind::HWP, 0.0}};
}

ElementChain pauli_z_chain() {
    return {{PlateKind::QWP, 0.0}, {PlateKind::HWP, 0.0}, {PlateKind::QWP, 0.0}, {PlateKind::HWP, 0.0}};
}

std::vector<std::array<double, 3>> default_decomposition_seeds() {
    return {{0.0, 0.0, 0.0},      {45.0, 22.5, -45.0},  {-45.0, 30.0, 45.0},  {20.0, -40.0, 70.0},
            {60.0, 10.0, -30.0},  {-70.0, -20.0, 15.0}, {30.0, 60.0, 30.0},   {-30.0, -60.0, -30.0}};
}

ElementChain decompose_qwp_hwp_qwp(const Op2& target, std::span<const std::array<double, 3>> seeds) {
    double best_residual = std::numeric_limits<double>::infinity();
    ElementChain best;
    for (const auto& seed : seeds) {
        const auto coarse = simplex_search(target, seed);
        const ElementChain chain = template_chain(least_squares_polish(target, coarse));
        const double residual = phase_invariant_distance(chain_matrix(chain), target);
        if (residual < best_residual) {
            best_residual = residual;
            best = chain;
        }
        if (best_residual < 1e-12) break;
    }
    if (!(best_residual <= kAcceptResidual))
        throw DecompositionFailed("QWP-HWP-QWP decomposition residual " + std::to_string(best_residual));
    return best;
}

ElementChain compile_u3(const DilationAngles& a) {
    const Op2 target = u3_matrix(a.theta_w2);
    ElementChain fixed = pauli_z_chain();
    if (phase_invariant_distance(chain_matrix(fixed), target) < 1e-12) return fixed;
    const auto seeds = default_decomposition_seeds();
    return decompose_qwp_hwp_qwp(target, seeds);
}

std::string format_chain(std::span<const WaveplateSetting> chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "->";
        out += chain[i].kind == PlateKind::HWP ? "HWP@" : "QWP@";
        out += csv::format_double(chain[i].angle_deg);
    }
    return out;
}

std::vector<Table1Row> table1_report(const PTParams& p, std::span<const double> times) {
    std::vector<Table1Row> rows;
    rows.reserve(times.size());
    for (double t : times) {
        const DilationAngles a = angles(p, t);
        rows.push_back({t, compile_u1(a), compile_u2(a), u2_central_angle_deg(a), compile_u3(a)});
    }
    return rows;
}

std::string table1_csv(std::span<const Table1Row> rows) {
    std::string out = csv::header({"time", "npbs_T", "npbs_R", "u2_chain", "u2_phi_deg", "u3_chain"}) + "\n";
    for (const auto& row : rows) {
        csv::Row line;
        line.add(row.t)
            .add(row.npbs.transmittance)
            .add(row.npbs.reflectance)
            .add(std::string_view{format_chain(row.u2)})
            .add(row.u2_phi_deg)
            .add(std::string_view{format_chain(row.u3)});
        out += line.str() + "\n";
    }
    return out;
}

}  // namespace ptsim
