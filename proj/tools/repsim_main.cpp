#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repsim/errors.hpp"

#include "commands.hpp"
#include "config.hpp"
#include "version.hpp"

namespace {

struct Cli {
    std::string config_path;
    std::vector<std::string> sets;
    repsim::cli::CommandOptions options;
};

void add_common(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--config", cli.config_path, "scenario config file (key = value lines)");
    cmd->add_option("--set", cli.sets, "override a config key, e.g. --set seed=7")
        ->take_all();
    cmd->add_option("--out", cli.options.out_dir, "output directory");
    cmd->add_option("--threads", cli.options.n_threads,
                    "worker threads for ensembles (results do not depend on this)");
    cmd->add_flag("--quiet", cli.options.quiet, "suppress progress output");
}

repsim::cli::Scenario build_scenario(const Cli& cli) {
    repsim::cli::Scenario scenario;
    if (!cli.config_path.empty())
        repsim::cli::load_config_file(cli.config_path, scenario);
    for (const std::string& assignment : cli.sets)
        repsim::cli::apply_override(assignment, scenario);
    return scenario;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(repsim::cli::kToolName) +
                 " — deviation-test reputation dynamics toolkit"};
    app.set_version_flag("--version", repsim::cli::kToolVersion);
    app.require_subcommand(1);

    Cli cli;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "fixed points, thresholds and regime for a parameter set");
    CLI::App* simulate = app.add_subcommand(
        "simulate", "one seeded sample path, written as CSV");
    CLI::App* montecarlo = app.add_subcommand(
        "montecarlo", "independent seeded runs with summary statistics");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "regime classification along a d or pbar grid");
    CLI::App* ode = app.add_subcommand(
        "ode", "exact mean-field solution with a simulated overlay");
    for (CLI::App* cmd : {analyze, simulate, montecarlo, sweep, ode})
        add_common(cmd, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const repsim::cli::Scenario scenario = build_scenario(cli);
        if (analyze->parsed()) repsim::cli::cmd_analyze(scenario, cli.options);
        else if (simulate->parsed()) repsim::cli::cmd_simulate(scenario, cli.options);
        else if (montecarlo->parsed()) repsim::cli::cmd_montecarlo(scenario, cli.options);
        else if (sweep->parsed()) repsim::cli::cmd_sweep(scenario, cli.options);
        else if (ode->parsed()) repsim::cli::cmd_ode(scenario, cli.options);
    } catch (const repsim::ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const repsim::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const repsim::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
