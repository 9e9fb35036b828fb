#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "repsim/errors.hpp"
#include "repsim/experiments.hpp"
#include "repsim/meanfield.hpp"
#include "repsim/simulate.hpp"

#include "csv.hpp"
#include "json_writer.hpp"
#include "svg.hpp"
#include "textio.hpp"
#include "version.hpp"

namespace repsim::cli {

namespace {

namespace fs = std::filesystem;

fs::path prepare_out_dir(Scenario& scenario, const CommandOptions& options) {
    if (options.out_dir) scenario.out_dir = *options.out_dir;
    fs::path dir(scenario.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string());
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

std::string resolved_config_text(const Scenario& scenario) {
    std::string out;
    for (const auto& [key, value] : echo_scenario(scenario)) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

void emit_header(JsonWriter& json, const std::string& command,
                 const Scenario& scenario) {
    json.key("tool").begin_object();
    json.key("name").value(std::string_view(kToolName));
    json.key("version").value(std::string_view(kToolVersion));
    json.end_object();
    json.key("generator").begin_object();
    json.key("name").value(RandomStream::generator_name());
    json.key("uniform").value(std::string_view("(x >> 11) * 2^-53"));
    json.key("exponential").value(
        std::string_view("-ln(((x >> 12) + 0.5) * 2^-52) / rate"));
    json.key("stream_order").value(std::string_view(
        "per step: one event draw, then one interarrival draw when timestamps are on"));
    json.key("run_seed").value(std::string_view(
        "splitmix64(base_seed + (run_index + 1) * 0x9E3779B97F4A7C15)"));
    json.end_object();
    json.key("command").value(std::string_view(command));
    json.key("config").begin_object();
    for (const auto& [key, value] : echo_scenario(scenario))
        json.key(key).value(std::string_view(value));
    json.end_object();
}

void emit_fixed_points(JsonWriter& json, const RegimeReport& report) {
    json.key("fixed_points").begin_array();
    for (const FixedPoint& point : report.fixed_points) {
        json.begin_object();
        json.key("kind").value(to_string(point.kind));
        json.key("alpha").value(point.location.x());
        json.key("beta").value(point.location.y());
        json.key("reputation").value(point.reputation_value);
        json.key("region").value(to_string(point.region));
        json.end_object();
    }
    json.end_array();
}

void emit_regime(JsonWriter& json, const RegimeReport& report, double pi) {
    json.key("regime").value(to_string(report.regime));
    json.key("pbar_critical");
    if (report.pbar_critical)
        json.value(*report.pbar_critical);
    else
        json.null();
    json.key("d_c1").value(report.d_c1);
    json.key("d_c2").value(report.d_c2);
    json.key("pi").value(pi);
    json.key("two_sided_unique").value(report.two_sided_unique);
    emit_fixed_points(json, report);
}

void emit_occupancy(JsonWriter& json, const OccupancyStats& stats) {
    json.begin_object();
    json.key("targets").begin_array();
    for (double target : stats.targets) json.value(target);
    json.end_array();
    json.key("epsilon").value(stats.epsilon);
    json.key("burn_in").value(stats.burn_in);
    json.key("fractions").begin_array();
    for (double fraction : stats.fractions) json.value(fraction);
    json.end_array();
    json.key("elsewhere").value(stats.elsewhere);
    json.end_object();
}

std::vector<double> resolve_targets(const Scenario& scenario,
                                    const RegimeReport& report) {
    if (!scenario.targets.empty()) return scenario.targets;
    std::vector<double> targets;
    for (const FixedPoint& point : report.fixed_points)
        targets.push_back(point.reputation_value);
    return targets;
}

SimulationConfig simulation_config(const Scenario& scenario,
                                   const ModelParams& params) {
    SimulationConfig config{params};
    config.r0 = scenario.r0;
    config.n_steps = scenario.n_steps;
    config.seed = scenario.seed;
    config.record_timestamps = scenario.record_timestamps;
    config.scaling_n = scenario.scaling_n;
    return config;
}

void note(const CommandOptions& options, const std::string& line) {
    if (!options.quiet) std::cout << line << '\n';
}

} // namespace

void cmd_analyze(Scenario scenario, const CommandOptions& options) {
    const ModelParams params = resolve_params(scenario);
    const fs::path dir = prepare_out_dir(scenario, options);
    const RegimeReport report = classify_regime(params);
    const double pi = false_reputation(params);

    JsonWriter json;
    json.begin_object();
    emit_header(json, "analyze", scenario);
    json.key("results").begin_object();
    emit_regime(json, report, pi);
    json.end_object();
    json.end_object();
    write_file(dir / "report_analyze.json", json.str() + "\n");
    write_file(dir / "resolved_config.txt", resolved_config_text(scenario));

    note(options, "regime: " + std::string(to_string(report.regime)));
    note(options, "pbar_critical: " + (report.pbar_critical
                                           ? format_double(*report.pbar_critical)
                                           : std::string("none")));
    note(options, "d_c1: " + format_double(report.d_c1) +
                      "  d_c2: " + format_double(report.d_c2));
    note(options, "pi: " + format_double(pi));
    for (const FixedPoint& point : report.fixed_points)
        note(options, std::string("fixed point (") + std::string(to_string(point.kind)) +
                          "): alpha=" + format_double(point.location.x()) +
                          " beta=" + format_double(point.location.y()) +
                          " R=" + format_double(point.reputation_value));
}

void cmd_simulate(Scenario scenario, const CommandOptions& options) {
    const ModelParams params = resolve_params(scenario);
    const fs::path dir = prepare_out_dir(scenario, options);
    const Trajectory trajectory = simulate(simulation_config(scenario, params));
    const RegimeReport report = classify_regime(params);
    const std::uint64_t burn_in = burn_in_steps(scenario);
    const double mean_r = post_burn_in_mean_r(trajectory, burn_in);
    const OccupancyStats stats =
        occupancy(trajectory, resolve_targets(scenario, report),
                  scenario.epsilon, burn_in);

    write_file(dir / "trajectory.csv", trajectory_csv(trajectory));

    JsonWriter json;
    json.begin_object();
    emit_header(json, "simulate", scenario);
    json.key("results").begin_object();
    emit_regime(json, report, false_reputation(params));
    json.key("final_alpha").value(trajectory.final_alpha);
    json.key("final_beta").value(trajectory.final_beta);
    json.key("final_r").value(trajectory.final_alpha /
                              (trajectory.final_alpha + trajectory.final_beta));
    json.key("post_burn_in_mean_r").value(mean_r);
    json.key("occupancy");
    emit_occupancy(json, stats);
    json.end_object();
    json.end_object();
    write_file(dir / "report_simulate.json", json.str() + "\n");
    write_file(dir / "resolved_config.txt", resolved_config_text(scenario));

    note(options, "steps: " + format_u64(scenario.n_steps) +
                      "  post-burn-in mean R: " + format_double(mean_r));
    note(options, "wrote " + (dir / "trajectory.csv").string());
}

void cmd_montecarlo(Scenario scenario, const CommandOptions& options) {
    const ModelParams params = resolve_params(scenario);
    const fs::path dir = prepare_out_dir(scenario, options);
    const RegimeReport report = classify_regime(params);
    const std::uint64_t burn_in = burn_in_steps(scenario);
    OccupancySettings settings{resolve_targets(scenario, report),
                               scenario.epsilon, burn_in};
    const MeanBand band{scenario.mean_band_low, scenario.mean_band_high};
    const SimulationConfig config = simulation_config(scenario, params);
    const MonteCarloSummary summary =
        monte_carlo(config, scenario.n_runs, scenario.base_seed, band, settings,
                    options.n_threads);

    if (scenario.write_runs) {
        const fs::path runs_dir = dir / "runs";
        std::error_code ec;
        fs::create_directories(runs_dir, ec);
        for (const RunStats& run : summary.runs) {
            SimulationConfig run_config = config;
            run_config.seed = run.seed;
            char name[32];
            std::snprintf(name, sizeof(name), "run_%04llu.csv",
                          static_cast<unsigned long long>(run.run_index));
            write_file(runs_dir / name, trajectory_csv(simulate(run_config)));
        }
    }

    JsonWriter json;
    json.begin_object();
    emit_header(json, "montecarlo", scenario);
    json.key("results").begin_object();
    emit_regime(json, report, false_reputation(params));
    json.key("n_runs").value(summary.n_runs);
    json.key("base_seed").value(summary.base_seed);
    json.key("predicate").begin_object();
    json.key("mean_band_low").value(summary.predicate.low);
    json.key("mean_band_high").value(summary.predicate.high);
    json.end_object();
    json.key("aggregate").begin_object();
    json.key("n_meeting_predicate").value(summary.n_meeting_predicate);
    json.key("mean_r_mean").value(summary.mean_r_mean);
    json.key("mean_r_min").value(summary.mean_r_min);
    json.key("mean_r_max").value(summary.mean_r_max);
    json.end_object();
    json.key("runs").begin_array();
    for (const RunStats& run : summary.runs) {
        json.begin_object();
        json.key("run_index").value(run.run_index);
        json.key("seed").value(run.seed);
        json.key("mean_r").value(run.mean_r);
        json.key("occupancy");
        emit_occupancy(json, run.occupancy);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    json.end_object();
    write_file(dir / "montecarlo.json", json.str() + "\n");
    write_file(dir / "resolved_config.txt", resolved_config_text(scenario));

    note(options, format_u64(summary.n_meeting_predicate) + "/" +
                      format_u64(summary.n_runs) + " runs in mean-R band [" +
                      format_double(band.low) + ", " + format_double(band.high) +
                      "]");
}

void cmd_sweep(Scenario scenario, const CommandOptions& options) {
    const ModelParams params = resolve_params(scenario);
    const fs::path dir = prepare_out_dir(scenario, options);
    if (scenario.sweep_parameter.empty())
        throw ValidationError("missing required key 'sweep_parameter'");
    if (scenario.grid.empty())
        throw ValidationError("missing required key 'grid'");
    const SweepResult result = scenario.sweep_parameter == "d"
                                   ? sweep_d(params, scenario.grid)
                                   : sweep_pbar(params, scenario.grid);

    write_file(dir / "sweep.csv", sweep_csv(result));
    write_file(dir / "sweep.svg", bifurcation_svg(result, params));

    JsonWriter json;
    json.begin_object();
    emit_header(json, "sweep", scenario);
    json.key("results").begin_object();
    json.key("swept_parameter").value(to_string(result.parameter));
    json.key("rows").begin_array();
    for (const SweepRow& row : result.rows) {
        json.begin_object();
        json.key("value").value(row.value);
        json.key("regime").value(to_string(row.report.regime));
        json.key("n_fixed_points").value(
            static_cast<std::uint64_t>(row.report.fixed_points.size()));
        json.key("rep_true");
        if (row.rep_true) json.value(*row.rep_true); else json.null();
        json.key("rep_false");
        if (row.rep_false) json.value(*row.rep_false); else json.null();
        json.end_object();
    }
    json.end_array();
    json.end_object();
    json.end_object();
    write_file(dir / "report_sweep.json", json.str() + "\n");
    write_file(dir / "resolved_config.txt", resolved_config_text(scenario));

    note(options, "swept " + scenario.sweep_parameter + " over " +
                      format_u64(result.rows.size()) + " values; wrote " +
                      (dir / "sweep.csv").string());
}

void cmd_ode(Scenario scenario, const CommandOptions& options) {
    const ModelParams params = resolve_params(scenario);
    const fs::path dir = prepare_out_dir(scenario, options);
    if (!(scenario.t_end > 0.0))
        throw OutOfRangeError("t_end", "must be positive");

    const ReputationState start = initial_state(scenario.r0, params.u());
    const PiecewiseSolution solution =
        solve({start.alpha(), start.beta()}, params, scenario.t_end);

    // The overlay needs event times on the same axis as the solution, so the
    // companion simulation always records timestamps.
    SimulationConfig config = simulation_config(scenario, params);
    config.record_timestamps = true;
    const Trajectory trajectory = simulate(config);

    write_file(dir / "ode_segments.csv", ode_segments_csv(solution));
    write_file(dir / "ode_samples.csv",
               ode_samples_csv(solution, scenario.ode_samples));
    write_file(dir / "ode.svg", overlay_svg(solution, trajectory, params));

    const Vector2d terminal = solution.eval(scenario.t_end);
    JsonWriter json;
    json.begin_object();
    emit_header(json, "ode", scenario);
    json.key("results").begin_object();
    json.key("n_segments").value(
        static_cast<std::uint64_t>(solution.segments.size()));
    json.key("crossing_times").begin_array();
    for (double t : solution.crossing_times()) json.value(t);
    json.end_array();
    json.key("terminal_alpha").value(terminal.x());
    json.key("terminal_beta").value(terminal.y());
    json.key("terminal_r").value(terminal.x() / (terminal.x() + terminal.y()));
    emit_fixed_points(json, classify_regime(params));
    json.end_object();
    json.end_object();
    write_file(dir / "report_ode.json", json.str() + "\n");
    write_file(dir / "resolved_config.txt", resolved_config_text(scenario));

    note(options, format_u64(solution.segments.size()) + " segment(s); terminal R = " +
                      format_double(terminal.x() / (terminal.x() + terminal.y())));
}

} // namespace repsim::cli
