#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repsim/params.hpp"

namespace repsim::cli {

// A scenario is a flat key = value document (UTF-8, '#' comments). Unknown
// keys are rejected. Everything except the model parameters has a default;
// the resolved scenario is echoed verbatim into every output so a run can be
// reproduced from its own artifacts.
struct Scenario {
    // model parameters (required; give either p or pbar, not both)
    std::optional<double> theta;
    std::optional<double> p;
    std::optional<double> pbar;
    std::optional<double> d;
    std::optional<double> omega;
    std::optional<double> u;

    // simulation
    double r0 = 0.0;
    std::uint64_t n_steps = 100000;
    std::uint64_t seed = 1;
    std::uint64_t scaling_n = 1;
    bool record_timestamps = false;

    // occupancy
    double epsilon = 0.05;
    double burn_in_fraction = 0.2;
    std::vector<double> targets;  // empty = fixed-point reputations

    // monte carlo
    std::uint64_t n_runs = 100;
    std::uint64_t base_seed = 1;
    bool write_runs = false;
    double mean_band_low = 0.75;
    double mean_band_high = 0.85;

    // sweep
    std::string sweep_parameter;  // "d" or "pbar"
    std::vector<double> grid;

    // ode
    double t_end = 2000.0;
    std::uint64_t ode_samples = 512;

    std::string out_dir = ".";
};

// Parses a config file into `scenario`; throws ValidationError with the file
// line number on any problem.
void load_config_file(const std::string& path, Scenario& scenario);

// Applies one --set key=value override.
void apply_override(const std::string& assignment, Scenario& scenario);

// Checks required keys and derives p from pbar (or vice versa); returns the
// validated model parameters.
ModelParams resolve_params(Scenario& scenario);

// burn-in steps = floor(burn_in_fraction * n_steps)
std::uint64_t burn_in_steps(const Scenario& scenario);

// Canonical (key, rendered value) pairs of the fully resolved scenario, in a
// fixed order. Feeding them back as a config reproduces the scenario.
std::vector<std::pair<std::string, std::string>> echo_scenario(const Scenario& scenario);

} // namespace repsim::cli
