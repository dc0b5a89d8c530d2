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

#include <cstdint>
#include <span>
#include <vector>

#include "ptsim/linalg.hpp"
#include "ptsim/parallel.hpp"
#include "ptsim/pt_model.hpp"
#include "ptsim/tomography.hpp"

namespace ptsim {

/// `steps` uniformly spaced points from t_start to t_end inclusive; one point
/// means t_start alone. Requires steps >= 1.
std::vector<double> uniform_grid(double t_start, double t_end, std::int64_t steps);

struct SweepPoint {
    double t = 0.0;
    double p0_theory = 0.0;
    double p0_postselected = 0.0;
    double success_prob = 0.0;
};

/// Exact and circuit-simulated |0> population plus post-selection probability
/// at each time, for the input |0>.
std::vector<SweepPoint> sweep(const PTParams& p, std::span<const double> times, Exec exec = Exec::Parallel);

struct DilationCheck {
    double t = 0.0;
    double lcu_residual = 0.0;
    double fidelity = 1.0;  ///< post-selected vs exact state; 1 when success probability <= 1e-6
    double success_prob = 0.0;
};

std::vector<DilationCheck> check_dilation(const PTParams& p, std::span<const double> times,
                                          Exec exec = Exec::Parallel);

struct TomographyPoint {
    double t = 0.0;
    Density2 theory;
    CountData counts;
    TomoEstimate estimate;
    double fidelity = 0.0;      ///< fidelity_paper(estimate.rho, theory)
    double avg_abs_diff = 0.0;  ///< avg_abs_diff(estimate.rho, theory)
};

/// Simulated tomography of the post-selected state at each time. The sampling
/// seed for time index i is derive_seed(seed, i) and the resampling seed
/// derive_seed(seed, i, 1).
std::vector<TomographyPoint> simulate_tomography(const PTParams& p, std::span<const double> times,
                                                 std::uint64_t shots_per_axis, std::uint64_t resamples,
                                                 std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace ptsim
