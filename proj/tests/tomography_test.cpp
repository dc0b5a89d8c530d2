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

#include "ptsim/tomography.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "ptsim/pt_model.hpp"
#include "test_support.hpp"

using namespace ptsim;

namespace {

Density2 bloch_state(double x, double y, double z) {
    Op2 m;
    m(0, 0) = 0.5 * (1 + z);
    m(1, 1) = 0.5 * (1 - z);
    m(0, 1) = Complex{0.5 * x, -0.5 * y};
    m(1, 0) = Complex{0.5 * x, 0.5 * y};
    return Density2(m);
}

CountData counts_from_bloch(std::uint64_t shots, std::array<double, 3> bloch) {
    CountData c;
    c.shots_per_axis = shots;
    for (std::size_t i = 0; i < 3; ++i) {
        c.axes[i].n_plus = static_cast<std::uint64_t>(std::llround(shots * 0.5 * (1 + bloch[i])));
        c.axes[i].n_minus = shots - c.axes[i].n_plus;
    }
    return c;
}

// Projector for the +1 outcome of each axis.
Op2 plus_projector(PauliAxis axis) {
    const Op2 sigma = axis == PauliAxis::X ? pauli::x() : axis == PauliAxis::Y ? pauli::y() : pauli::z();
    return Complex{0.5} * (Op2::identity() + sigma);
}

}  // namespace

TEST(Born, Basics) {
    const Density2 zero = bloch_state(0, 0, 1);
    EXPECT_EQ(born_probabilities(zero, PauliAxis::Z), std::make_pair(1.0, 0.0));
    const auto [px, mx] = born_probabilities(zero, PauliAxis::X);
    EXPECT_NEAR(px, 0.5, 1e-15);
    EXPECT_NEAR(mx, 0.5, 1e-15);
}

TEST(Born, MatchesProjectorTraces) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const Density2 rho = ptsim::testing::random_mixed_state(rng);
        for (PauliAxis axis : kPauliAxes) {
            const auto [plus, minus] = born_probabilities(rho, axis);
            EXPECT_NEAR(plus, trace(rho.matrix() * plus_projector(axis)).real(), 1e-12);
            EXPECT_NEAR(plus + minus, 1.0, 1e-15);
        }
    }
}

TEST(SampleCounts, DeterministicAndConsistent) {
    const Density2 rho = bloch_state(0.3, -0.4, 0.5);
    const CountData a = sample_counts(rho, 1000, 9);
    const CountData b = sample_counts(rho, 1000, 9);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(a.axes[i].n_plus, b.axes[i].n_plus);
        EXPECT_EQ(a.axes[i].n_plus + a.axes[i].n_minus, 1000u);
    }
    EXPECT_EQ(a.shots_per_axis, 1000u);
    EXPECT_THROW(sample_counts(rho, 0, 1), InvalidArgument);
}

TEST(SampleCounts, MeanWithinBinomialBounds) {
    const Density2 rho = bloch_state(0.3, -0.4, 0.5);
    const std::uint64_t shots = 200;
    const int seeds = 1000;
    std::array<double, 3> sum{};
    for (int s = 0; s < seeds; ++s) {
        const CountData c = sample_counts(rho, shots, static_cast<std::uint64_t>(s));
        for (std::size_t i = 0; i < 3; ++i) sum[i] += static_cast<double>(c.axes[i].n_plus) / shots;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const double p = born_probabilities(rho, kPauliAxes[i]).first;
        const double sigma = std::sqrt(p * (1 - p) / (shots * seeds));
        EXPECT_NEAR(sum[i] / seeds, p, 3 * sigma) << to_string(kPauliAxes[i]);
    }
}

TEST(Reconstruct, NoiselessRoundTrip) {
    // Dyadic Bloch components make the counts exact at 1024 shots.
    const CountData c = counts_from_bloch(1024, {0.5, -0.25, 0.125});
    const Density2 rho = reconstruct(c);
    EXPECT_LT(frobenius_norm(rho.matrix() - bloch_state(0.5, -0.25, 0.125).matrix()), 1e-12);
}

TEST(Reconstruct, UnphysicalEstimateIsClippedToNearestState) {
    CountData c;
    c.shots_per_axis = 100;
    for (auto& a : c.axes) a = {100, 0};
    const Density2 rho = reconstruct(c);

    // Oracle: eigen-decompose the raw estimate, clip, renormalize.
    Eigen::Matrix2cd raw;
    raw << 1.0, Complex{0.5, -0.5}, Complex{0.5, 0.5}, 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(raw);
    Eigen::Vector2d vals = es.eigenvalues().cwiseMax(0.0);
    vals /= vals.sum();
    const Eigen::Matrix2cd clipped = es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t k = 0; k < 2; ++k) EXPECT_LT(std::abs(rho(r, k) - clipped(r, k)), 1e-12);

    EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-12);
    EXPECT_NEAR(rho.eigenvalues()[0], 0.0, 1e-12);
}

TEST(Reconstruct, AdversarialCountsStayPhysical) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> n(0, 7);
    for (int i = 0; i < 500; ++i) {
        CountData c;
        c.shots_per_axis = 7;
        for (auto& a : c.axes) {
            a.n_plus = n(rng);
            a.n_minus = 7 - a.n_plus;
        }
        EXPECT_NO_THROW(reconstruct(c));
    }
    CountData bad;
    bad.shots_per_axis = 10;
    bad.axes[0] = {3, 3};
    EXPECT_THROW(reconstruct(bad), InvalidArgument);
}

TEST(Reconstruct, HighFidelityAtTenThousandShots) {
    std::mt19937_64 rng(43);
    int good = 0;
    for (int s = 0; s < 100; ++s) {
        const Density2 rho = Density2::pure(ptsim::testing::random_unit_ket(rng));
        if (fidelity_paper(reconstruct(sample_counts(rho, 10000, s)), rho) >= 0.99) ++good;
    }
    EXPECT_GE(good, 95);
}

TEST(Reconstruct, PaperStateAtMillionShots) {
    const Density2 truth = rho_theory(ptsim::testing::paper_params(), 0.7876);
    const Density2 est = reconstruct(sample_counts(truth, 1000000, 2024));
    EXPECT_LT(avg_abs_diff(est, truth), 0.01);
}

TEST(MonteCarlo, RejectsTooFewResamples) {
    const CountData c = counts_from_bloch(1024, {0.5, 0.0, 0.0});
    EXPECT_THROW(monte_carlo(c, 1, 0, reconstruct(c)), InvalidArgument);
}

TEST(MonteCarlo, SmallSpreadAtHugeShots) {
    const CountData c = counts_from_bloch(1u << 24, {0.5, -0.25, 0.125});
    const TomoEstimate est = monte_carlo(c, 50, 3, reconstruct(c));
    for (const auto& row : est.element_std)
        for (double s : row) EXPECT_LT(s, 1e-2);
    EXPECT_LT(est.fidelity_std, 1e-2);
}

TEST(MonteCarlo, SpreadScalesAsInverseSqrtShots) {
    const Density2 rho = bloch_state(0.3, -0.4, 0.5);
    std::array<double, 3> log_n{}, log_std{};
    const std::uint64_t shots[] = {100, 10000, 1000000};
    for (std::size_t i = 0; i < 3; ++i) {
        const CountData c = sample_counts(rho, shots[i], 5);
        const TomoEstimate est = monte_carlo(c, 400, 6, rho);
        log_n[i] = std::log(static_cast<double>(shots[i]));
        log_std[i] = std::log(est.element_std[0][1]);
    }
    const double slope = (log_std[2] - log_std[0]) / (log_n[2] - log_n[0]);
    EXPECT_NEAR(slope, -0.5, 0.1);
}

TEST(MonteCarlo, SerialAndParallelAgreeAndAreDeterministic) {
    const Density2 rho = bloch_state(0.1, 0.6, -0.3);
    const CountData c = sample_counts(rho, 5000, 8);
    const TomoEstimate a = monte_carlo(c, 200, 17, rho, Exec::Serial);
    const TomoEstimate b = monte_carlo(c, 200, 17, rho, Exec::Parallel);
    const TomoEstimate d = monte_carlo(c, 200, 17, rho, Exec::Parallel);
    EXPECT_EQ(a.element_std, b.element_std);
    EXPECT_EQ(a.fidelity_std, b.fidelity_std);
    EXPECT_EQ(b.element_std, d.element_std);
    EXPECT_EQ(a.rho.matrix(), b.rho.matrix());
}

TEST(CountsCsv, Format) {
    const CountData c = counts_from_bloch(1024, {0.5, -0.25, 0.125});
    EXPECT_EQ(counts_csv(c), "axis,n_plus,n_minus,shots\nX,768,256,1024\nY,384,640,1024\nZ,576,448,1024\n");
}
