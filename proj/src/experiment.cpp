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

#include "ptsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "ptsim/csv.hpp"
#include "ptsim/dilation.hpp"
#include "ptsim/optics.hpp"
#include "ptsim/sweep.hpp"

namespace ptsim {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw InvalidValue(path.empty() ? key : path + "." + key, "unknown field");
    }
}

double real_field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw MissingField(path);
    const json& v = obj.at(key);
    if (!v.is_number()) throw InvalidValue(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InvalidValue(path, "must be finite");
    return x;
}

std::uint64_t count_field(const json& v, const std::string& path, std::uint64_t minimum) {
    if (!v.is_number_integer()) throw InvalidValue(path, "expected an integer");
    if (v.is_number_unsigned()) {
        const auto n = v.get<std::uint64_t>();
        if (n < minimum) throw InvalidValue(path, "must be at least " + std::to_string(minimum));
        return n;
    }
    const auto n = v.get<std::int64_t>();
    if (n < static_cast<std::int64_t>(minimum)) throw InvalidValue(path, "must be at least " + std::to_string(minimum));
    return static_cast<std::uint64_t>(n);
}

PTParams parse_params(const json& doc) {
    if (!doc.contains("params")) throw MissingField("params");
    const json& obj = doc.at("params");
    if (!obj.is_object()) throw InvalidValue("params", "expected an object");
    reject_unknown(obj, "params", {"r", "s", "mu", "theta", "hbar"});
    PTParams p;
    p.r = real_field(obj, "r", "params.r");
    p.s = real_field(obj, "s", "params.s");
    p.mu = real_field(obj, "mu", "params.mu");
    p.theta = real_field(obj, "theta", "params.theta");
    if (obj.contains("hbar")) {
        p.hbar = real_field(obj, "hbar", "params.hbar");
        if (!(p.hbar > 0.0)) throw InvalidValue("params.hbar", "must be positive");
    }
    return p;
}

std::vector<double> parse_times(const json& v) {
    if (!v.is_array() || v.empty()) throw InvalidValue("times", "expected a non-empty array of numbers");
    std::vector<double> times;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string path = "times[" + std::to_string(i) + "]";
        if (!v[i].is_number()) throw InvalidValue(path, "expected a number");
        const double t = v[i].get<double>();
        if (!std::isfinite(t)) throw InvalidValue(path, "must be finite");
        times.push_back(t);
    }
    return times;
}

TimeGrid parse_grid(const json& v) {
    if (!v.is_object()) throw InvalidValue("grid", "expected an object");
    reject_unknown(v, "grid", {"t_start", "t_end", "steps"});
    TimeGrid g;
    g.t_start = real_field(v, "t_start", "grid.t_start");
    g.t_end = real_field(v, "t_end", "grid.t_end");
    if (!v.contains("steps")) throw MissingField("grid.steps");
    g.steps = static_cast<std::int64_t>(count_field(v.at("steps"), "grid.steps", 1));
    return g;
}

std::string rho_fields(const Density2& rho) {
    csv::Row row;
    for (std::size_t k = 0; k < 4; ++k) row.add(rho.matrix().data[k].real()).add(rho.matrix().data[k].imag());
    return row.str();
}

const std::string kRhoColumns = "rho00_re,rho00_im,rho01_re,rho01_im,rho10_re,rho10_im,rho11_re,rho11_im";

struct SuiteResult {
    std::string name;
    std::size_t points = 0;
    double max_residual = 0.0;
    double min_fidelity = 1.0;
    bool passed = true;
};

constexpr double kResidualTol = 1e-10;
constexpr double kFidelityTol = 1e-10;

void accumulate(SuiteResult& suite, const std::vector<DilationCheck>& checks) {
    for (const auto& c : checks) {
        ++suite.points;
        suite.max_residual = std::max(suite.max_residual, c.lcu_residual);
        suite.min_fidelity = std::min(suite.min_fidelity, c.fidelity);
        if (!(c.lcu_residual < kResidualTol) || !(c.fidelity >= 1.0 - kFidelityTol)) suite.passed = false;
    }
}

std::vector<SuiteResult> run_verification(const RunConfig& cfg) {
    std::vector<SuiteResult> suites;

    {
        SuiteResult s{"configured parameters"};
        accumulate(s, check_dilation(cfg.params, cfg.point_times()));
        accumulate(s, check_dilation(cfg.params, cfg.sweep_times()));
        suites.push_back(s);
    }

    std::mt19937_64 rng(derive_seed(cfg.seed, 0, 7));
    std::uniform_real_distribution<double> mag(0.1, 3.0), ang(-M_PI, M_PI), frac(0.0, 1.0);
    {
        SuiteResult s{"random unbroken"};
        for (int n = 0; n < 200;) {
            const PTParams p{mag(rng), mag(rng), mag(rng), ang(rng), 1.0};
            const PTDerived d = derive(p);
            if (d.omega_sq < 1e-2) continue;
            ++n;
            const double t = frac(rng) * 2.0 * M_PI / d.omega.real();
            accumulate(s, check_dilation(p, std::vector<double>{t}, Exec::Serial));
        }
        suites.push_back(s);
    }
    {
        SuiteResult s{"broken"};
        const std::vector<double> unit = uniform_grid(0.0, 1.0, 21);
        accumulate(s, check_dilation(PTParams{2.0, 1.0, 1.0, M_PI / 2, 1.0}, unit));
        for (int n = 0; n < 50;) {
            const PTParams p{mag(rng), mag(rng), mag(rng), ang(rng), 1.0};
            if (derive(p).omega_sq > -1e-2) continue;
            ++n;
            accumulate(s, check_dilation(p, std::vector<double>{frac(rng)}, Exec::Serial));
        }
        suites.push_back(s);
    }
    {
        SuiteResult s{"exceptional-point neighbourhood"};
        const std::vector<double> grid = uniform_grid(0.0, 2.0, 41);
        // s * mu = (r sin theta)^2 + offset, so |omega| = 2 sqrt(|offset|) < 1e-3.
        for (double offset : {-1e-7, -1e-10, 0.0, 1e-10, 1e-7})
            accumulate(s, check_dilation(PTParams{2.0, 1.0, 1.0 + offset, M_PI / 6, 1.0}, grid));
        suites.push_back(s);
    }
    return suites;
}

}  // namespace

std::vector<double> RunConfig::point_times() const {
    if (times) return *times;
    const TimeGrid g = grid.value_or(TimeGrid{});
    return uniform_grid(g.t_start, g.t_end, g.steps);
}

std::vector<double> RunConfig::sweep_times() const {
    if (grid) return uniform_grid(grid->t_start, grid->t_end, grid->steps);
    if (times) return uniform_grid(0.0, *std::max_element(times->begin(), times->end()), TimeGrid{}.steps);
    return uniform_grid(TimeGrid{}.t_start, TimeGrid{}.t_end, TimeGrid{}.steps);
}

RunConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidValue("<document>", e.what());
    }
    if (!doc.is_object()) throw InvalidValue("<document>", "expected a JSON object");
    reject_unknown(doc, "", {"params", "times", "grid", "shots_per_axis", "mc_resamples", "seed", "output_dir"});

    RunConfig cfg;
    cfg.params = parse_params(doc);
    if (doc.contains("times")) cfg.times = parse_times(doc.at("times"));
    if (doc.contains("grid")) cfg.grid = parse_grid(doc.at("grid"));
    if (doc.contains("shots_per_axis")) cfg.shots_per_axis = count_field(doc.at("shots_per_axis"), "shots_per_axis", 1);
    if (doc.contains("mc_resamples")) cfg.mc_resamples = count_field(doc.at("mc_resamples"), "mc_resamples", 2);
    if (doc.contains("seed")) cfg.seed = count_field(doc.at("seed"), "seed", 0);
    if (doc.contains("output_dir")) {
        const json& v = doc.at("output_dir");
        if (!v.is_string() || v.get<std::string>().empty())
            throw InvalidValue("output_dir", "expected a non-empty string");
        cfg.output_dir = v.get<std::string>();
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidValue("<file>", "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::optional<Command> parse_command(std::string_view name) {
    if (name == "verify") return Command::Verify;
    if (name == "evolve") return Command::Evolve;
    if (name == "tomo") return Command::Tomo;
    if (name == "sweep") return Command::Sweep;
    if (name == "table1") return Command::Table1;
    return std::nullopt;
}

int execute(Command command, const RunConfig& cfg, std::ostream& log) {
    const auto& dir = cfg.output_dir;
    try {
        switch (command) {
            case Command::Verify: {
                bool ok = true;
                double worst = 0.0;
                for (const auto& s : run_verification(cfg)) {
                    log << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.points
                        << " points, max residual " << s.max_residual << ", min fidelity "
                        << std::setprecision(15) << s.min_fidelity << std::setprecision(6) << "\n";
                    ok = ok && s.passed;
                    worst = std::max(worst, s.max_residual);
                }
                log << "max residual " << worst << "\n";
                return ok ? kExitSuccess : kExitFailure;
            }
            case Command::Evolve: {
                std::string out = "t," + kRhoColumns + "\n";
                for (double t : cfg.point_times())
                    out += csv::Row().add(t).str() + "," + rho_fields(rho_theory(cfg.params, t)) + "\n";
                csv::write_file(dir / "fig2_theory.csv", out);
                log << "wrote " << (dir / "fig2_theory.csv").string() << "\n";
                return kExitSuccess;
            }
            case Command::Tomo: {
                const auto times = cfg.point_times();
                const auto points =
                    simulate_tomography(cfg.params, times, cfg.shots_per_axis, cfg.mc_resamples, cfg.seed);
                std::string exp = "t," + kRhoColumns + ",rho00_std,rho01_std,rho10_std,rho11_std\n";
                std::string fid = csv::header({"t", "fidelity", "fidelity_std"}) + "\n";
                for (std::size_t i = 0; i < points.size(); ++i) {
                    const auto& pt = points[i];
                    csv::Row stds;
                    for (const auto& row : pt.estimate.element_std) stds.add(row[0]).add(row[1]);
                    exp += csv::Row().add(pt.t).str() + "," + rho_fields(pt.estimate.rho) + "," + stds.str() + "\n";
                    fid += csv::Row().add(pt.t).add(pt.fidelity).add(pt.estimate.fidelity_std).str() + "\n";
                    csv::write_file(dir / ("counts_" + std::to_string(i) + ".csv"), counts_csv(pt.counts));
                    log << "t=" << pt.t << " fidelity=" << std::setprecision(10) << pt.fidelity
                        << " avg_abs_diff=" << pt.avg_abs_diff << std::setprecision(6) << "\n";
                }
                csv::write_file(dir / "fig2_exp.csv", exp);
                csv::write_file(dir / "fidelities.csv", fid);
                log << "wrote " << (dir / "fig2_exp.csv").string() << ", " << (dir / "fidelities.csv").string()
                    << "\n";
                return kExitSuccess;
            }
            case Command::Sweep: {
                const auto times = cfg.sweep_times();
                std::string out = csv::header({"t", "p0_theory", "p0_postselected", "success_prob"}) + "\n";
                for (const auto& pt : sweep(cfg.params, times))
                    out += csv::Row().add(pt.t).add(pt.p0_theory).add(pt.p0_postselected).add(pt.success_prob).str() +
                           "\n";
                csv::write_file(dir / "fig3b.csv", out);
                log << "wrote " << (dir / "fig3b.csv").string() << "\n";
                return kExitSuccess;
            }
            case Command::Table1: {
                const auto times = cfg.point_times();
                const auto rows = table1_report(cfg.params, times);
                csv::write_file(dir / "table1.csv", table1_csv(rows));
                for (const auto& r : rows)
                    log << "t=" << r.t << "  NPBS T/R=" << r.npbs.ratio() << "  U2 " << format_chain(r.u2)
                        << "  U3 " << format_chain(r.u3) << "\n";
                log << "wrote " << (dir / "table1.csv").string() << "\n";
                return kExitSuccess;
            }
        }
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        log << "io error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}

}  // namespace ptsim
