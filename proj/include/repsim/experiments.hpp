#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repsim/meanfield.hpp"
#include "repsim/simulate.hpp"

namespace repsim {

// Fraction of post-burn-in steps whose reputation lies within epsilon of each
// target, plus the remainder.
struct OccupancyStats {
    std::vector<double> targets;
    double epsilon = 0.0;
    std::uint64_t burn_in = 0;
    std::vector<double> fractions;  // one per target
    double elsewhere = 0.0;
};

// Neighborhoods must be pairwise disjoint (target distance > 2*epsilon) and
// burn_in must leave at least one step.
OccupancyStats occupancy(const Trajectory& trajectory,
                         const std::vector<double>& targets, double epsilon,
                         std::uint64_t burn_in);

// Acceptance band on the post-burn-in mean reputation of a run.
struct MeanBand {
    double low = 0.0;
    double high = 1.0;
};

struct RunStats {
    std::uint64_t run_index = 0;
    std::uint64_t seed = 0;
    double mean_r = 0.0;  // post-burn-in
    OccupancyStats occupancy;
};

struct MonteCarloSummary {
    std::uint64_t n_runs = 0;
    std::uint64_t base_seed = 0;
    MeanBand predicate;
    std::vector<RunStats> runs;  // ordered by run_index
    std::uint64_t n_meeting_predicate = 0;
    double mean_r_mean = 0.0;
    double mean_r_min = 0.0;
    double mean_r_max = 0.0;
};

struct OccupancySettings {
    std::vector<double> targets;
    double epsilon = 0.05;
    std::uint64_t burn_in = 0;
};

// Independent seeded runs; run i uses derive_run_seed(base_seed, i). The
// result is a pure function of its arguments: worker threads only change how
// the runs are scheduled, never what they compute.
MonteCarloSummary monte_carlo(const SimulationConfig& config,
                              std::uint64_t n_runs, std::uint64_t base_seed,
                              MeanBand predicate,
                              const OccupancySettings& occupancy_settings,
                              unsigned n_threads = 1);

enum class SweptParameter { D, Pbar };

std::string_view to_string(SweptParameter parameter);

struct SweepRow {
    double value = 0.0;
    RegimeReport report;
    std::optional<double> rep_true;
    std::optional<double> rep_false;
};

struct SweepResult {
    SweptParameter parameter = SweptParameter::D;
    std::vector<double> grid;
    std::vector<SweepRow> rows;
};

// Regime classification along a sorted grid of deviation thresholds
// (the remaining parameters come from `base`).
SweepResult sweep_d(const ModelParams& base, const std::vector<double>& grid);

// Same along a sorted grid of lying probabilities pbar (p = 1 - pbar).
SweepResult sweep_pbar(const ModelParams& base, const std::vector<double>& grid);

struct ConvergenceRow {
    std::uint64_t scaling_n = 0;
    double median_sup_deviation = 0.0;
};

// For each N: run ceil(N * t_horizon) events of the rescaled process with
// timestamps at rate N, evaluate the exact mean-field solution at the event
// times, and record the sup over time of the Euclidean deviation in
// (alpha, beta); the table reports the median over runs_per_n runs. Run r of
// list entry k is seeded with derive_run_seed(derive_run_seed(base_seed, k), r).
std::vector<ConvergenceRow> convergence_study(
    const ModelParams& params, double r0, double t_horizon,
    const std::vector<std::uint64_t>& n_list, std::uint64_t runs_per_n,
    std::uint64_t base_seed);

// Sample statistics over the records after `burn_in` steps.
double post_burn_in_mean_r(const Trajectory& trajectory, std::uint64_t burn_in);
double post_burn_in_stddev_r(const Trajectory& trajectory, std::uint64_t burn_in);

// First step whose reputation lies in [low, high]; absent if none does.
std::optional<std::uint64_t> first_hit_step(const Trajectory& trajectory,
                                            double low, double high);

} // namespace repsim
