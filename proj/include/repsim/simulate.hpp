#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "repsim/params.hpp"
#include "repsim/rng.hpp"
#include "repsim/state.hpp"

namespace repsim {

// The three branches of the per-observation update.
enum class ObservationEvent : std::uint8_t {
    PositiveDirect,  // w.p. p*theta
    NegativeDirect,  // w.p. p*(1-theta)
    IndirectReport,  // w.p. pbar; maximally negative, gated by the deviation test
};

std::string_view to_string(ObservationEvent event);

struct SimulationConfig {
    ModelParams params;
    double r0 = 0.0;
    std::uint64_t n_steps = 100000;
    std::uint64_t seed = 1;
    bool record_timestamps = false;
    std::uint64_t scaling_n = 1;  // 1 = the unscaled process
};

// One event of a sample path. alpha/beta hold the state the event found
// (i.e. the state after the previous event); the deviation test for an
// indirect report is evaluated on exactly this state.
struct StepRecord {
    std::uint64_t step;  // 1-based
    double t;            // event time; 0 when timestamps are off
    double alpha;
    double beta;
    ObservationEvent event;
    bool accepted;
};

struct Trajectory {
    SimulationConfig config;
    std::vector<StepRecord> steps;
    double final_alpha = 0.0;  // state after the last event
    double final_beta = 0.0;
};

double reputation_of_record(const StepRecord& record);

// Draws one uniform variate v and classifies it: v < p*theta positive direct,
// p*theta <= v < p negative direct, otherwise indirect. Consumes exactly one
// draw from the stream.
ObservationEvent sample_event(const ModelParams& params, RandomStream& rng);

struct StepResult {
    ReputationState state;
    bool accepted;
};

// One transition of the unscaled process: discount both counters by u, then
// add (1,0) for a positive direct observation, (0,1) for a negative one, and
// (0,omega) for an indirect report that passes the deviation test on the
// pre-step state. `accepted` reports the test outcome (true for direct
// events).
StepResult step(const ReputationState& state, ObservationEvent event,
                const ModelParams& params);

// One transition of the rescaled process family: discount factor
// 1 - (1-u)/N, increments scaled by 1/N, same event and acceptance logic.
// N = 1 reproduces `step` exactly.
StepResult scaled_step(const ReputationState& state, ObservationEvent event,
                       const ModelParams& params, std::uint64_t scaling_n);

// Seeded sample path; a pure function of the config. Stream discipline per
// step: one uniform draw for the event selection, then, when timestamps are
// recorded, one exponential draw (rate = scaling_n) for the interarrival.
Trajectory simulate(const SimulationConfig& config);

} // namespace repsim
