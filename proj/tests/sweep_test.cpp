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

#include "ptsim/sweep.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace ptsim;
using ptsim::testing::paper_params;

TEST(UniformGrid, EndpointsAndSingleStep) {
    const auto g = uniform_grid(0.0, 1.5521, 200);
    ASSERT_EQ(g.size(), 200u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.5521);
    EXPECT_EQ(uniform_grid(0.3, 9.0, 1), std::vector<double>{0.3});
    EXPECT_THROW(uniform_grid(0.0, 1.0, 0), InvalidArgument);
}

TEST(Sweep, PostselectedPopulationTracksTheory) {
    const auto grid = uniform_grid(0.0, 1.5521, 200);
    const auto points = sweep(paper_params(), grid);
    EXPECT_EQ(points.front().p0_theory, 1.0);
    for (const auto& pt : points) {
        EXPECT_NEAR(pt.p0_postselected, pt.p0_theory, 1e-9) << pt.t;
        EXPECT_GT(pt.success_prob, 0.0);
        EXPECT_LE(pt.success_prob, 1.0);
    }
}

TEST(Sweep, SerialAndParallelIdentical) {
    std::mt19937_64 rng(51);
    const PTParams p = ptsim::testing::random_unbroken(rng);
    const auto grid = uniform_grid(0.0, 4.0, 257);
    const auto a = sweep(p, grid, Exec::Serial);
    const auto b = sweep(p, grid, Exec::Parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].t, b[i].t);
        EXPECT_EQ(a[i].p0_theory, b[i].p0_theory);
        EXPECT_EQ(a[i].p0_postselected, b[i].p0_postselected);
        EXPECT_EQ(a[i].success_prob, b[i].success_prob);
    }
}

TEST(Sweep, ParallelErrorsPropagate) {
    const std::vector<double> times{0.0, 1e3};
    const PTParams broken{2.0, 1.0, 1.0, M_PI / 2, 1.0};
    EXPECT_THROW(sweep(broken, times, Exec::Parallel), Error);
    EXPECT_THROW(sweep(broken, times, Exec::Serial), Error);
}

TEST(CheckDilation, PaperTimes) {
    const std::vector<double> times{0.0, 0.7876, 0.9894, 1.5521};
    for (const auto& c : check_dilation(paper_params(), times)) {
        EXPECT_LT(c.lcu_residual, 1e-10);
        EXPECT_NEAR(c.fidelity, 1.0, 1e-10);
    }
}

TEST(SimulateTomography, DeterministicAndSeedSensitive) {
    const std::vector<double> times{0.0, 0.7876};
    const auto a = simulate_tomography(paper_params(), times, 2000, 20, 42, Exec::Serial);
    const auto b = simulate_tomography(paper_params(), times, 2000, 20, 42, Exec::Parallel);
    const auto c = simulate_tomography(paper_params(), times, 2000, 20, 43);
    ASSERT_EQ(a.size(), 2u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].estimate.rho.matrix(), b[i].estimate.rho.matrix());
        EXPECT_EQ(a[i].estimate.element_std, b[i].estimate.element_std);
        EXPECT_EQ(a[i].fidelity, b[i].fidelity);
    }
    EXPECT_NE(a[1].counts.axes[0].n_plus, c[1].counts.axes[0].n_plus);
}
