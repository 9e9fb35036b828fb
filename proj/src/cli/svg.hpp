#pragma once

#include <string>
#include <vector>

#include "repsim/experiments.hpp"
#include "repsim/meanfield.hpp"
#include "repsim/simulate.hpp"

namespace repsim::cli {

// Minimal static SVG line plots; pure text, byte-stable for equal inputs.

// Reputation against time: simulated path (thin gray, decimated to at most
// ~2000 points), exact mean-field curve (blue), dashed reference lines at
// theta (upper) and pi (lower).
std::string overlay_svg(const PiecewiseSolution& solution,
                        const Trajectory& trajectory,
                        const ModelParams& params);

// Fixed-point reputation branches against the swept parameter: solid where a
// branch exists, dashed where it does not.
std::string bifurcation_svg(const SweepResult& result, const ModelParams& base);

} // namespace repsim::cli
