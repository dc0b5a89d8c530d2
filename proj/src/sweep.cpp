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

#include "ptsim/dilation.hpp"

namespace ptsim {

namespace {
const Ket2 kZero{{1.0, 0.0}};
}

std::vector<double> uniform_grid(double t_start, double t_end, std::int64_t steps) {
    if (steps < 1) throw InvalidArgument("uniform_grid: steps must be at least 1");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    if (steps == 1) {
        grid[0] = t_start;
        return grid;
    }
    const double width = t_end - t_start;
    for (std::int64_t i = 0; i < steps; ++i)
        grid[static_cast<std::size_t>(i)] = t_start + width * static_cast<double>(i) / static_cast<double>(steps - 1);
    grid.back() = t_end;
    return grid;
}

std::vector<SweepPoint> sweep(const PTParams& p, std::span<const double> times, Exec exec) {
    p.validate();
    std::vector<SweepPoint> out(times.size());
    for_each_index(static_cast<std::int64_t>(times.size()), exec, [&](std::int64_t i) {
        const double t = times[static_cast<std::size_t>(i)];
        const auto [ket, prob] = postselect(run_circuit(p, t, kZero));
        out[static_cast<std::size_t>(i)] = {t, p0(p, t), std::norm(ket[0]), prob};
    });
    return out;
}

std::vector<DilationCheck> check_dilation(const PTParams& p, std::span<const double> times, Exec exec) {
    p.validate();
    std::vector<DilationCheck> out(times.size());
    for_each_index(static_cast<std::int64_t>(times.size()), exec, [&](std::int64_t i) {
        const double t = times[static_cast<std::size_t>(i)];
        DilationCheck check;
        check.t = t;
        check.lcu_residual = lcu_residual(p, t);
        const auto [ket, prob] = postselect(run_circuit(p, t, kZero));
        check.success_prob = prob;
        if (prob > 1e-6) check.fidelity = fidelity_paper(Density2::pure(ket), rho_theory(p, t));
        out[static_cast<std::size_t>(i)] = check;
    });
    return out;
}

std::vector<TomographyPoint> simulate_tomography(const PTParams& p, std::span<const double> times,
                                                 std::uint64_t shots_per_axis, std::uint64_t resamples,
                                                 std::uint64_t seed, Exec exec) {
    p.validate();
    std::vector<TomographyPoint> out;
    out.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const Density2 theory = rho_theory(p, t);
        const Density2 prepared = Density2::pure(postselect(run_circuit(p, t, kZero)).first);
        const CountData counts = sample_counts(prepared, shots_per_axis, derive_seed(seed, i));
        TomoEstimate est = monte_carlo(counts, resamples, derive_seed(seed, i, 1), theory, exec);
        const double fid = fidelity_paper(est.rho, theory);
        const double diff = avg_abs_diff(est.rho, theory);
        out.push_back({t, theory, counts, std::move(est), fid, diff});
    }
    return out;
}

}  // namespace ptsim
