#pragma once

#include <optional>
#include <string>

#include "config.hpp"

namespace repsim::cli {

struct CommandOptions {
    std::optional<std::string> out_dir;  // --out override
    bool quiet = false;
    unsigned n_threads = 1;  // execution detail; never echoed into outputs
};

void cmd_analyze(Scenario scenario, const CommandOptions& options);
void cmd_simulate(Scenario scenario, const CommandOptions& options);
void cmd_montecarlo(Scenario scenario, const CommandOptions& options);
void cmd_sweep(Scenario scenario, const CommandOptions& options);
void cmd_ode(Scenario scenario, const CommandOptions& options);

} // namespace repsim::cli
