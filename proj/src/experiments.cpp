#include "repsim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "repsim/errors.hpp"

namespace repsim {

OccupancyStats occupancy(const Trajectory& trajectory,
                         const std::vector<double>& targets, double epsilon,
                         std::uint64_t burn_in) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw OutOfRangeError("epsilon", "must be positive");
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (std::abs(targets[i] - targets[j]) <= 2.0 * epsilon)
                throw ValidationError("overlapping targets: neighborhoods must be disjoint");
    if (burn_in >= trajectory.steps.size())
        throw ValidationError("burn-in too large: no steps left");

    OccupancyStats stats;
    stats.targets = targets;
    stats.epsilon = epsilon;
    stats.burn_in = burn_in;
    std::vector<std::uint64_t> counts(targets.size(), 0);
    std::uint64_t outside = 0;
    for (std::size_t i = burn_in; i < trajectory.steps.size(); ++i) {
        const double r = reputation_of_record(trajectory.steps[i]);
        bool matched = false;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (std::abs(r - targets[k]) <= epsilon) {
                ++counts[k];
                matched = true;
                break;  // disjoint neighborhoods: at most one can match
            }
        }
        if (!matched) ++outside;
    }
    const double total = static_cast<double>(trajectory.steps.size() - burn_in);
    stats.fractions.reserve(targets.size());
    for (std::uint64_t c : counts)
        stats.fractions.push_back(static_cast<double>(c) / total);
    stats.elsewhere = static_cast<double>(outside) / total;
    return stats;
}

MonteCarloSummary monte_carlo(const SimulationConfig& config,
                              std::uint64_t n_runs, std::uint64_t base_seed,
                              MeanBand predicate,
                              const OccupancySettings& occupancy_settings,
                              unsigned n_threads) {
    if (n_runs < 1) throw OutOfRangeError("n_runs", "must be >= 1");
    if (n_threads < 1) throw OutOfRangeError("n_threads", "must be >= 1");

    MonteCarloSummary summary;
    summary.n_runs = n_runs;
    summary.base_seed = base_seed;
    summary.predicate = predicate;
    summary.runs.resize(n_runs);

    auto run_one = [&](std::uint64_t index) {
        SimulationConfig run_config = config;
        run_config.seed = derive_run_seed(base_seed, index);
        const Trajectory trajectory = simulate(run_config);
        RunStats stats;
        stats.run_index = index;
        stats.seed = run_config.seed;
        stats.mean_r = post_burn_in_mean_r(trajectory, occupancy_settings.burn_in);
        stats.occupancy = occupancy(trajectory, occupancy_settings.targets,
                                    occupancy_settings.epsilon,
                                    occupancy_settings.burn_in);
        summary.runs[index] = std::move(stats);
    };

    if (n_threads == 1 || n_runs == 1) {
        for (std::uint64_t i = 0; i < n_runs; ++i) run_one(i);
    } else {
        // Runs are indexed; workers pull indices and write disjoint slots, so
        // the summary is identical for every thread count.
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> workers;
        const unsigned count = std::min<std::uint64_t>(n_threads, n_runs);
        workers.reserve(count);
        for (unsigned w = 0; w < count; ++w) {
            workers.emplace_back([&] {
                for (std::uint64_t i = next.fetch_add(1); i < n_runs;
                     i = next.fetch_add(1))
                    run_one(i);
            });
        }
        for (std::thread& worker : workers) worker.join();
    }

    double sum = 0.0;
    double lowest = summary.runs.front().mean_r;
    double highest = lowest;
    std::uint64_t meeting = 0;
    for (const RunStats& run : summary.runs) {
        sum += run.mean_r;
        lowest = std::min(lowest, run.mean_r);
        highest = std::max(highest, run.mean_r);
        if (run.mean_r >= predicate.low && run.mean_r <= predicate.high)
            ++meeting;
    }
    summary.n_meeting_predicate = meeting;
    summary.mean_r_mean = sum / static_cast<double>(n_runs);
    summary.mean_r_min = lowest;
    summary.mean_r_max = highest;
    return summary;
}

std::string_view to_string(SweptParameter parameter) {
    return parameter == SweptParameter::D ? "d" : "pbar";
}

namespace {

void require_sorted_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw ValidationError("sweep grid must not be empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] < grid[i - 1])
            throw ValidationError("sweep grid must be sorted ascending");
}

SweepRow make_row(double value, const ModelParams& params) {
    SweepRow row;
    row.value = value;
    row.report = classify_regime(params);
    for (const FixedPoint& point : row.report.fixed_points) {
        if (point.kind == FixedPointKind::TruePoint)
            row.rep_true = point.reputation_value;
        else
            row.rep_false = point.reputation_value;
    }
    return row;
}

} // namespace

SweepResult sweep_d(const ModelParams& base, const std::vector<double>& grid) {
    require_sorted_grid(grid);
    SweepResult result;
    result.parameter = SweptParameter::D;
    result.grid = grid;
    result.rows.reserve(grid.size());
    for (double d : grid) {
        const ModelParams params(base.theta(), base.p(), d, base.omega(), base.u());
        result.rows.push_back(make_row(d, params));
    }
    return result;
}

SweepResult sweep_pbar(const ModelParams& base, const std::vector<double>& grid) {
    require_sorted_grid(grid);
    SweepResult result;
    result.parameter = SweptParameter::Pbar;
    result.grid = grid;
    result.rows.reserve(grid.size());
    for (double pbar : grid) {
        if (pbar < 0.0 || pbar > 1.0)
            throw OutOfRangeError("pbar", "grid values must lie in [0, 1]");
        const ModelParams params(base.theta(), 1.0 - pbar, base.d(),
                                 base.omega(), base.u());
        result.rows.push_back(make_row(pbar, params));
    }
    return result;
}

std::vector<ConvergenceRow> convergence_study(
    const ModelParams& params, double r0, double t_horizon,
    const std::vector<std::uint64_t>& n_list, std::uint64_t runs_per_n,
    std::uint64_t base_seed) {
    if (n_list.empty()) throw ValidationError("N list must not be empty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw OutOfRangeError("N", "must be >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw ValidationError("N list must be strictly increasing");
    }
    if (!(t_horizon > 0.0)) throw OutOfRangeError("t_horizon", "must be positive");
    if (runs_per_n < 1) throw OutOfRangeError("runs_per_n", "must be >= 1");

    const ReputationState start = initial_state(r0, params.u());
    const Vector2d start_point(start.alpha(), start.beta());

    std::vector<ConvergenceRow> table;
    table.reserve(n_list.size());
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        const std::uint64_t scaling_n = n_list[k];
        const std::uint64_t sub_base = derive_run_seed(base_seed, k);
        std::vector<double> deviations;
        deviations.reserve(runs_per_n);
        for (std::uint64_t run = 0; run < runs_per_n; ++run) {
            SimulationConfig config{params};
            config.r0 = r0;
            config.n_steps = static_cast<std::uint64_t>(std::ceil(
                static_cast<double>(scaling_n) * t_horizon));
            config.seed = derive_run_seed(sub_base, run);
            config.record_timestamps = true;
            config.scaling_n = scaling_n;
            const Trajectory trajectory = simulate(config);

            const double t_last = trajectory.steps.back().t;
            const PiecewiseSolution solution =
                solve(start_point, params, std::max(t_last, t_horizon) + 1.0);

            // The simulated path is piecewise constant between events, so the
            // deviation is largest at event times: compare the state found by
            // each event and the state it left behind against the field.
            double sup = 0.0;
            for (std::size_t i = 0; i < trajectory.steps.size(); ++i) {
                const StepRecord& record = trajectory.steps[i];
                const Vector2d reference = solution.eval(record.t);
                const Vector2d before(record.alpha, record.beta);
                const Vector2d after =
                    i + 1 < trajectory.steps.size()
                        ? Vector2d(trajectory.steps[i + 1].alpha,
                                   trajectory.steps[i + 1].beta)
                        : Vector2d(trajectory.final_alpha, trajectory.final_beta);
                sup = std::max(sup, (before - reference).norm());
                sup = std::max(sup, (after - reference).norm());
            }
            deviations.push_back(sup);
        }
        std::sort(deviations.begin(), deviations.end());
        const std::size_t mid = deviations.size() / 2;
        const double median =
            deviations.size() % 2 == 1
                ? deviations[mid]
                : 0.5 * (deviations[mid - 1] + deviations[mid]);
        table.push_back({scaling_n, median});
    }
    return table;
}

double post_burn_in_mean_r(const Trajectory& trajectory, std::uint64_t burn_in) {
    if (burn_in >= trajectory.steps.size())
        throw ValidationError("burn-in too large: no steps left");
    double sum = 0.0;
    for (std::size_t i = burn_in; i < trajectory.steps.size(); ++i)
        sum += reputation_of_record(trajectory.steps[i]);
    return sum / static_cast<double>(trajectory.steps.size() - burn_in);
}

double post_burn_in_stddev_r(const Trajectory& trajectory, std::uint64_t burn_in) {
    const double mean = post_burn_in_mean_r(trajectory, burn_in);
    const std::size_t n = trajectory.steps.size() - burn_in;
    if (n < 2) return 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = burn_in; i < trajectory.steps.size(); ++i) {
        const double delta = reputation_of_record(trajectory.steps[i]) - mean;
        sum_sq += delta * delta;
    }
    return std::sqrt(sum_sq / static_cast<double>(n - 1));
}

std::optional<std::uint64_t> first_hit_step(const Trajectory& trajectory,
                                            double low, double high) {
    for (const StepRecord& record : trajectory.steps) {
        const double r = reputation_of_record(record);
        if (r >= low && r <= high) return record.step;
    }
    return std::nullopt;
}

} // namespace repsim
