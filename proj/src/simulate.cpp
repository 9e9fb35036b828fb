#include "repsim/simulate.hpp"

#include "repsim/errors.hpp"

namespace repsim {

std::string_view to_string(ObservationEvent event) {
    switch (event) {
        case ObservationEvent::PositiveDirect: return "positive_direct";
        case ObservationEvent::NegativeDirect: return "negative_direct";
        case ObservationEvent::IndirectReport: return "indirect_report";
    }
    return "unknown";
}

double reputation_of_record(const StepRecord& record) {
    return record.alpha / (record.alpha + record.beta);
}

ObservationEvent sample_event(const ModelParams& params, RandomStream& rng) {
    const double v = rng.u01();
    if (v < params.p() * params.theta()) return ObservationEvent::PositiveDirect;
    if (v < params.p()) return ObservationEvent::NegativeDirect;
    return ObservationEvent::IndirectReport;
}

StepResult step(const ReputationState& state, ObservationEvent event,
                const ModelParams& params) {
    return scaled_step(state, event, params, 1);
}

StepResult scaled_step(const ReputationState& state, ObservationEvent event,
                       const ModelParams& params, std::uint64_t scaling_n) {
    if (scaling_n < 1)
        throw OutOfRangeError("scaling_n", "scale index must be >= 1");
    const double n = static_cast<double>(scaling_n);
    // N = 1 keeps the discount at u itself, so the unscaled process is
    // reproduced bit for bit.
    const double discount =
        scaling_n == 1 ? params.u() : 1.0 - (1.0 - params.u()) / n;
    const double impact = 1.0 / n;

    double add_alpha = 0.0;
    double add_beta = 0.0;
    bool accepted = true;
    switch (event) {
        case ObservationEvent::PositiveDirect:
            add_alpha = impact;
            break;
        case ObservationEvent::NegativeDirect:
            add_beta = impact;
            break;
        case ObservationEvent::IndirectReport:
            // The test uses the pre-step state; the ratio is invariant under
            // the uniform discount, so this equals testing afterwards.
            accepted = deviation_test(state, params.d());
            if (accepted) add_beta = params.omega() * impact;
            break;
    }
    return {ReputationState(discount * state.alpha() + add_alpha,
                            discount * state.beta() + add_beta),
            accepted};
}

Trajectory simulate(const SimulationConfig& config) {
    validate_params(config.params);
    if (config.n_steps < 1)
        throw OutOfRangeError("n_steps", "must be >= 1");
    if (config.scaling_n < 1)
        throw OutOfRangeError("scaling_n", "must be >= 1");

    RandomStream rng(config.seed);
    ReputationState state = initial_state(config.r0, config.params.u());
    const double rate = static_cast<double>(config.scaling_n);

    Trajectory out{config};
    out.steps.reserve(config.n_steps);
    double t = 0.0;
    for (std::uint64_t n = 1; n <= config.n_steps; ++n) {
        const ObservationEvent event = sample_event(config.params, rng);
        if (config.record_timestamps) t += rng.exponential(rate);
        StepResult result = scaled_step(state, event, config.params, config.scaling_n);
        out.steps.push_back({n, config.record_timestamps ? t : 0.0,
                             state.alpha(), state.beta(), event,
                             result.accepted});
        state = result.state;
    }
    out.final_alpha = state.alpha();
    out.final_beta = state.beta();
    return out;
}

} // namespace repsim
