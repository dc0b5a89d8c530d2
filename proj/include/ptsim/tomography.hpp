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
#include <cstdint>
#include <string>
#include <utility>

#include "ptsim/linalg.hpp"
#include "ptsim/parallel.hpp"

namespace ptsim {

enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> kPauliAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

const char* to_string(PauliAxis axis);

struct AxisCounts {
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
};

/// Outcome counts for each Pauli axis; each axis uses the same number of shots.
struct CountData {
    std::array<AxisCounts, 3> axes{};  // indexed X, Y, Z
    std::uint64_t shots_per_axis = 0;

    const AxisCounts& operator[](PauliAxis axis) const { return axes[static_cast<int>(axis)]; }
    AxisCounts& operator[](PauliAxis axis) { return axes[static_cast<int>(axis)]; }

    /// Throws InvalidArgument unless n_plus + n_minus == shots_per_axis > 0 for every axis.
    void validate() const;
};

struct TomoEstimate {
    Density2 rho;
    /// sqrt(Var Re + Var Im) of each entry over the resamples.
    std::array<std::array<double, 2>, 2> element_std{};
    double fidelity_std = 0.0;
};

/// (p+, p-) = ((1 +/- Tr(rho sigma))/2).
std::pair<double, double> born_probabilities(const Density2& rho, PauliAxis axis);

/// Independent binomial draws per axis. Deterministic in (rho, shots, seed).
CountData sample_counts(const Density2& rho, std::uint64_t shots, std::uint64_t seed);

/// Linear inversion from Stokes components, then projection onto the Bloch
/// ball if the estimate is unphysical.
Density2 reconstruct(const CountData& counts);

/// Parametric bootstrap: redraws counts from the empirical rates, reconstructs
/// each replica and reports spreads. Iteration i draws from a generator seeded
/// by (seed, i), so the result does not depend on scheduling.
TomoEstimate monte_carlo(const CountData& counts, std::uint64_t resamples, std::uint64_t seed,
                         const Density2& rho_ref, Exec exec = Exec::Parallel);

/// CSV: axis,n_plus,n_minus,shots
std::string counts_csv(const CountData& counts);

}  // namespace ptsim
