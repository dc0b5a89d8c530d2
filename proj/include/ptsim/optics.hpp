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
#include <span>
#include <string>
#include <vector>

#include "ptsim/dilation.hpp"
#include "ptsim/linalg.hpp"

namespace ptsim {

enum class PlateKind { HWP, QWP };

/// A waveplate with its fast axis at angle_deg from horizontal, in (-90, 90].
struct WaveplateSetting {
    PlateKind kind = PlateKind::HWP;
    double angle_deg = 0.0;

    void validate() const;
    friend bool operator==(const WaveplateSetting&, const WaveplateSetting&) = default;
};

/// Non-polarizing beam splitter with transmittance T and reflectance R.
struct NpbsSpec {
    double transmittance = 1.0;
    double reflectance = 0.0;

    /// T/R; infinite when R = 0.
    double ratio() const;
};

/// Waveplates in propagation order.
using ElementChain = std::vector<WaveplateSetting>;

class DecompositionFailed : public Error {
public:
    using Error::Error;
};

/// HWP(h) = [[cos 2h, sin 2h], [sin 2h, -cos 2h]]; QWP(0) = diag(1, i), rotated
/// by conjugation for other angles. Global phases are dropped.
Op2 jones(const WaveplateSetting& w);

/// Product of the chain's Jones matrices; the first element acts first.
Op2 chain_matrix(std::span<const WaveplateSetting> chain);

/// Maps an angle in degrees onto (-90, 90].
double wrap_plate_angle(double deg);

NpbsSpec compile_u1(const DilationAngles& a);

/// HWP(0) -> QWP(0) -> HWP(phi) -> QWP(0) -> HWP(0), phi = -theta_w1/2 wrapped into (-45, 45].
ElementChain compile_u2(const DilationAngles& a);

/// Central half-wave plate angle of compile_u2, in degrees.
double u2_central_angle_deg(const DilationAngles& a);

/// The fixed chain QWP(0) -> HWP(0) -> QWP(0) -> HWP(0), realizing sigma_z.
ElementChain pauli_z_chain();

/// Seeds (alpha, beta, gamma) in degrees for the numeric decomposition.
std::vector<std::array<double, 3>> default_decomposition_seeds();

/// Finds QWP(alpha) -> HWP(beta) -> QWP(gamma) equal to `target` up to a global
/// phase. Multi-start simplex search followed by a least-squares polish.
/// Throws DecompositionFailed if the best residual exceeds 1e-6.
ElementChain decompose_qwp_hwp_qwp(const Op2& target,
                                   std::span<const std::array<double, 3>> seeds);

/// Uses the fixed sigma_z chain when it matches U3, otherwise the numeric template.
ElementChain compile_u3(const DilationAngles& a);

/// "HWP@20.39..." style labels joined by "->".
std::string format_chain(std::span<const WaveplateSetting> chain);

struct Table1Row {
    double t = 0.0;
    NpbsSpec npbs;
    ElementChain u2;
    double u2_phi_deg = 0.0;
    ElementChain u3;
};

std::vector<Table1Row> table1_report(const PTParams& p, std::span<const double> times);

/// CSV: time,npbs_T,npbs_R,u2_chain,u2_phi_deg,u3_chain
std::string table1_csv(std::span<const Table1Row> rows);

}  // namespace ptsim
