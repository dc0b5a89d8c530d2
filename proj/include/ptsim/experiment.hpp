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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptsim/pt_model.hpp"

namespace ptsim {

/// Configuration problems. The message starts with the offending field path.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what) : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class MissingField : public ConfigError {
public:
    explicit MissingField(std::string field) : ConfigError(std::move(field), "missing required field") {}
};

class InvalidValue : public ConfigError {
public:
    using ConfigError::ConfigError;
};

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    std::int64_t steps = 200;
};

/// A run of the simulated experiment. Defaults: hbar 1, 10^4 shots per axis,
/// 500 resamples, seed 42, output directory "out".
struct RunConfig {
    PTParams params;
    std::optional<std::vector<double>> times;
    std::optional<TimeGrid> grid;
    std::uint64_t shots_per_axis = 10000;
    std::uint64_t mc_resamples = 500;
    std::uint64_t seed = 42;
    std::filesystem::path output_dir = "out";

    /// Explicit times, or the grid points when only a grid is given.
    std::vector<double> point_times() const;
    /// The grid, or 200 points from 0 to the last explicit time.
    std::vector<double> sweep_times() const;
};

/// Parses a JSON configuration document:
///
///   {
///     "params": {"r": 2, "s": 1, "mu": 1, "theta": 0.39269908169872414, "hbar": 1},
///     "times": [0, 0.7876, 0.9894, 1.5521],
///     "grid": {"t_start": 0, "t_end": 1.5521, "steps": 200},
///     "shots_per_axis": 10000, "mc_resamples": 500, "seed": 42, "output_dir": "out"
///   }
///
/// Only params.{r, s, mu, theta} are required. Unknown keys are rejected.
RunConfig parse_config(std::string_view text);

/// Reads and parses a configuration file. Throws ConfigError on IO or content errors.
RunConfig load_config(const std::filesystem::path& path);

enum class Command { Verify, Evolve, Tomo, Sweep, Table1 };

std::optional<Command> parse_command(std::string_view name);

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Runs one command, writing CSV files under cfg.output_dir and a short report
/// to `log`. Returns 0 on success, 1 on a verification or physics failure and
/// 2 on IO failure.
int execute(Command command, const RunConfig& cfg, std::ostream& log);

}  // namespace ptsim
