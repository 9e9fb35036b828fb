#pragma once

#include <string>

#include "repsim/experiments.hpp"
#include "repsim/meanfield.hpp"
#include "repsim/simulate.hpp"

namespace repsim::cli {

// Columns: step,t,alpha,beta,R,event,accepted. The t column is empty when
// timestamps are off. One row per step; the first row shows the initial
// state (the state found by event 1).
std::string trajectory_csv(const Trajectory& trajectory);

// Columns: swept_value,regime,n_fixed_points,rep_true,rep_false (reputation
// columns empty where the branch is absent).
std::string sweep_csv(const SweepResult& result);

// Columns: index,t_start,t_end,region,c_alpha,c_beta,asymptote_alpha,asymptote_beta
std::string ode_segments_csv(const PiecewiseSolution& solution);

// Columns: t,alpha,beta,R sampled uniformly over [0, t_end].
std::string ode_samples_csv(const PiecewiseSolution& solution, std::uint64_t samples);

} // namespace repsim::cli
