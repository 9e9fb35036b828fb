#include "config.hpp"

#include <fstream>

#include "repsim/errors.hpp"
#include "textio.hpp"

namespace repsim::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ValidationError(where + ": " + message);
}

double read_double(const std::string& where, std::string_view text) {
    bool ok = false;
    const double value = parse_double(text, ok);
    if (!ok) fail(where, "expected a number, got '" + std::string(text) + "'");
    return value;
}

std::uint64_t read_u64(const std::string& where, std::string_view text) {
    bool ok = false;
    const std::uint64_t value = parse_u64(text, ok);
    if (!ok) fail(where, "expected a nonnegative integer, got '" + std::string(text) + "'");
    return value;
}

bool read_bool(const std::string& where, std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(where, "expected true or false, got '" + std::string(text) + "'");
}

std::vector<double> read_double_list(const std::string& where, std::string_view text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            trim(text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start));
        if (item.empty()) fail(where, "empty list element");
        values.push_back(read_double(where, item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

void assign(const std::string& where, std::string_view key,
            std::string_view value, Scenario& s) {
    if (key == "theta") s.theta = read_double(where, value);
    else if (key == "p") s.p = read_double(where, value);
    else if (key == "pbar") s.pbar = read_double(where, value);
    else if (key == "d") s.d = read_double(where, value);
    else if (key == "omega") s.omega = read_double(where, value);
    else if (key == "u") s.u = read_double(where, value);
    else if (key == "r0") s.r0 = read_double(where, value);
    else if (key == "n_steps") s.n_steps = read_u64(where, value);
    else if (key == "seed") s.seed = read_u64(where, value);
    else if (key == "scaling_n") s.scaling_n = read_u64(where, value);
    else if (key == "record_timestamps") s.record_timestamps = read_bool(where, value);
    else if (key == "epsilon") s.epsilon = read_double(where, value);
    else if (key == "burn_in_fraction") s.burn_in_fraction = read_double(where, value);
    else if (key == "targets") s.targets = read_double_list(where, value);
    else if (key == "n_runs") s.n_runs = read_u64(where, value);
    else if (key == "base_seed") s.base_seed = read_u64(where, value);
    else if (key == "write_runs") s.write_runs = read_bool(where, value);
    else if (key == "mean_band_low") s.mean_band_low = read_double(where, value);
    else if (key == "mean_band_high") s.mean_band_high = read_double(where, value);
    else if (key == "sweep_parameter") {
        if (value != "d" && value != "pbar")
            fail(where, "sweep_parameter must be 'd' or 'pbar'");
        s.sweep_parameter = std::string(value);
    } else if (key == "grid") s.grid = read_double_list(where, value);
    else if (key == "t_end") s.t_end = read_double(where, value);
    else if (key == "ode_samples") s.ode_samples = read_u64(where, value);
    else if (key == "out_dir") s.out_dir = std::string(value);
    else fail(where, "unknown key '" + std::string(key) + "'");
}

} // namespace

void load_config_file(const std::string& path, Scenario& scenario) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open config file");
    std::string line;
    int line_number = 0;
    std::vector<std::string> seen;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string where = path + ":" + std::to_string(line_number);
        std::string_view view(line);
        if (const std::size_t hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const std::size_t eq = view.find('=');
        if (eq == std::string_view::npos) fail(where, "expected key = value");
        const std::string_view key = trim(view.substr(0, eq));
        const std::string_view value = trim(view.substr(eq + 1));
        if (key.empty()) fail(where, "missing key");
        if (value.empty()) fail(where, "missing value for '" + std::string(key) + "'");
        for (const std::string& previous : seen)
            if (previous == key) fail(where, "duplicate key '" + std::string(key) + "'");
        seen.emplace_back(key);
        assign(where, key, value, scenario);
    }
}

void apply_override(const std::string& assignment, Scenario& scenario) {
    const std::string where = "--set " + assignment;
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ValidationError(where + ": expected key=value");
    const std::string_view key = trim(std::string_view(assignment).substr(0, eq));
    const std::string_view value = trim(std::string_view(assignment).substr(eq + 1));
    if (key.empty() || value.empty())
        throw ValidationError(where + ": expected key=value");
    assign(where, key, value, scenario);
}

ModelParams resolve_params(Scenario& scenario) {
    if (!scenario.theta) throw ValidationError("missing required key 'theta'");
    if (!scenario.d) throw ValidationError("missing required key 'd'");
    if (!scenario.omega) throw ValidationError("missing required key 'omega'");
    if (!scenario.u) throw ValidationError("missing required key 'u'");
    if (scenario.p && scenario.pbar)
        throw ValidationError("give either 'p' or 'pbar', not both");
    if (!scenario.p && !scenario.pbar)
        throw ValidationError("missing required key 'p' (or 'pbar')");
    if (!scenario.p) scenario.p = 1.0 - *scenario.pbar;
    scenario.pbar.reset();  // canonical form stores p only
    return validate_params(*scenario.theta, *scenario.p, *scenario.d,
                           *scenario.omega, *scenario.u);
}

std::uint64_t burn_in_steps(const Scenario& scenario) {
    if (scenario.burn_in_fraction < 0.0 || scenario.burn_in_fraction >= 1.0)
        throw OutOfRangeError("burn_in_fraction", "must lie in [0, 1)");
    return static_cast<std::uint64_t>(scenario.burn_in_fraction *
                                      static_cast<double>(scenario.n_steps));
}

std::vector<std::pair<std::string, std::string>> echo_scenario(const Scenario& s) {
    std::vector<std::pair<std::string, std::string>> pairs;
    const auto put = [&pairs](const char* key, std::string value) {
        pairs.emplace_back(key, std::move(value));
    };
    const auto put_list = [&put](const char* key, const std::vector<double>& values) {
        std::string joined;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) joined += ", ";
            joined += format_double(values[i]);
        }
        put(key, std::move(joined));
    };
    put("theta", format_double(s.theta.value_or(0.0)));
    put("p", format_double(s.p.value_or(0.0)));
    put("d", format_double(s.d.value_or(0.0)));
    put("omega", format_double(s.omega.value_or(0.0)));
    put("u", format_double(s.u.value_or(0.0)));
    put("r0", format_double(s.r0));
    put("n_steps", format_u64(s.n_steps));
    put("seed", format_u64(s.seed));
    put("scaling_n", format_u64(s.scaling_n));
    put("record_timestamps", s.record_timestamps ? "true" : "false");
    put("epsilon", format_double(s.epsilon));
    put("burn_in_fraction", format_double(s.burn_in_fraction));
    if (!s.targets.empty()) put_list("targets", s.targets);
    put("n_runs", format_u64(s.n_runs));
    put("base_seed", format_u64(s.base_seed));
    put("write_runs", s.write_runs ? "true" : "false");
    put("mean_band_low", format_double(s.mean_band_low));
    put("mean_band_high", format_double(s.mean_band_high));
    if (!s.sweep_parameter.empty()) put("sweep_parameter", s.sweep_parameter);
    if (!s.grid.empty()) put_list("grid", s.grid);
    put("t_end", format_double(s.t_end));
    put("ode_samples", format_u64(s.ode_samples));
    put("out_dir", s.out_dir);
    return pairs;
}

} // namespace repsim::cli
