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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ptsim/csv.hpp"

namespace ptsim {

namespace {

Op2 pauli_matrix(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return pauli::x();
        case PauliAxis::Y: return pauli::y();
        case PauliAxis::Z: return pauli::z();
    }
    return Op2::identity();
}

constexpr std::uint64_t kSamplingStream = 0;
constexpr std::uint64_t kResamplingStream = 1;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    return std::mt19937_64(derive_seed(seed, index, stream));
}

CountData draw_counts(const std::array<double, 3>& p_plus, std::uint64_t shots, std::mt19937_64& rng) {
    CountData out;
    out.shots_per_axis = shots;
    for (std::size_t i = 0; i < 3; ++i) {
        std::binomial_distribution<std::uint64_t> draw(shots, std::clamp(p_plus[i], 0.0, 1.0));
        out.axes[i].n_plus = draw(rng);
        out.axes[i].n_minus = shots - out.axes[i].n_plus;
    }
    return out;
}

struct Replica {
    Op2 rho;
    double fidelity = 0.0;
};

Replica run_replica(const std::array<double, 3>& rates, std::uint64_t shots, std::uint64_t seed,
                    std::uint64_t index, const Density2& rho_ref) {
    auto rng = make_rng(seed, index, kResamplingStream);
    const Density2 rho = reconstruct(draw_counts(rates, shots, rng));
    return {rho.matrix(), fidelity_paper(rho, rho_ref)};
}

}  // namespace

const char* to_string(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return "X";
        case PauliAxis::Y: return "Y";
        case PauliAxis::Z: return "Z";
    }
    return "?";
}

void CountData::validate() const {
    if (shots_per_axis == 0) throw InvalidArgument("CountData: shots_per_axis must be positive");
    for (const auto& a : axes)
        if (a.n_plus + a.n_minus != shots_per_axis)
            throw InvalidArgument("CountData: counts do not sum to shots_per_axis");
}

std::pair<double, double> born_probabilities(const Density2& rho, PauliAxis axis) {
    const double expectation = trace(rho.matrix() * pauli_matrix(axis)).real();
    const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
    return {p_plus, 1.0 - p_plus};
}

CountData sample_counts(const Density2& rho, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw InvalidArgument("sample_counts: shots must be positive");
    std::array<double, 3> p_plus{};
    for (std::size_t i = 0; i < 3; ++i) p_plus[i] = born_probabilities(rho, kPauliAxes[i]).first;
    auto rng = make_rng(seed, 0, kSamplingStream);
    return draw_counts(p_plus, shots, rng);
}

Density2 reconstruct(const CountData& counts) {
    counts.validate();
    const double shots = static_cast<double>(counts.shots_per_axis);
    std::array<double, 3> bloch{};
    for (std::size_t i = 0; i < 3; ++i)
        bloch[i] = (static_cast<double>(counts.axes[i].n_plus) - static_cast<double>(counts.axes[i].n_minus)) / shots;

    // For a qubit, clipping the negative eigenvalue and renormalizing is the
    // same as pulling the Bloch vector back onto the unit sphere.
    const double length = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
    if (length > 1.0)
        for (auto& b : bloch) b /= length;

    Op2 m;
    m(0, 0) = 0.5 * (1.0 + bloch[2]);
    m(1, 1) = 0.5 * (1.0 - bloch[2]);
    m(0, 1) = Complex{0.5 * bloch[0], -0.5 * bloch[1]};
    m(1, 0) = Complex{0.5 * bloch[0], 0.5 * bloch[1]};
    return Density2(m);
}

TomoEstimate monte_carlo(const CountData& counts, std::uint64_t resamples, std::uint64_t seed,
                         const Density2& rho_ref, Exec exec) {
    if (resamples < 2) throw InvalidArgument("monte_carlo: resamples must be at least 2");
    counts.validate();

    std::array<double, 3> rates{};
    for (std::size_t i = 0; i < 3; ++i)
        rates[i] = static_cast<double>(counts.axes[i].n_plus) / static_cast<double>(counts.shots_per_axis);

    std::vector<Replica> replicas(resamples);
    const auto n = static_cast<std::int64_t>(resamples);
    for_each_index(n, exec, [&](std::int64_t i) {
        const auto idx = static_cast<std::uint64_t>(i);
        replicas[idx] = run_replica(rates, counts.shots_per_axis, seed, idx, rho_ref);
    });

    // Reduced serially in index order so the floating-point sums are schedule-independent.
    Op2 mean;
    double fid_mean = 0.0;
    for (const auto& r : replicas) {
        mean = mean + r.rho;
        fid_mean += r.fidelity;
    }
    const Complex inv_n{1.0 / static_cast<double>(resamples)};
    mean = inv_n * mean;
    fid_mean /= static_cast<double>(resamples);

    std::array<double, 4> var{};
    double fid_var = 0.0;
    for (const auto& r : replicas) {
        for (std::size_t k = 0; k < 4; ++k) var[k] += std::norm(r.rho.data[k] - mean.data[k]);
        fid_var += (r.fidelity - fid_mean) * (r.fidelity - fid_mean);
    }
    const double dof = static_cast<double>(resamples - 1);

    TomoEstimate est{reconstruct(counts), {}, std::sqrt(fid_var / dof)};
    for (std::size_t k = 0; k < 4; ++k) est.element_std[k / 2][k % 2] = std::sqrt(var[k] / dof);
    return est;
}

std::string counts_csv(const CountData& counts) {
    std::string out = csv::header({"axis", "n_plus", "n_minus", "shots"}) + "\n";
    for (PauliAxis axis : kPauliAxes) {
        csv::Row row;
        row.add(std::string_view{to_string(axis)})
            .add(static_cast<long long>(counts[axis].n_plus))
            .add(static_cast<long long>(counts[axis].n_minus))
            .add(static_cast<long long>(counts.shots_per_axis));
        out += row.str() + "\n";
    }
    return out;
}

}  // namespace ptsim
