#pragma once

namespace repsim {

// Discounted observation counters: alpha holds positive mass, beta negative.
// Both components are nonnegative and at least one is positive.
class ReputationState {
public:
    ReputationState(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

private:
    double alpha_;
    double beta_;
};

// Canonical start with reputation r0 and full certainty mass 1/(1-u):
// alpha = r0/(1-u), beta = (1-r0)/(1-u).
ReputationState initial_state(double r0, double u);

// R = alpha / (alpha + beta), in [0, 1].
double reputation(const ReputationState& state);

// Deviation test: an extremely negative second-hand report is believed iff
// the current reputation does not exceed d.  Evaluated as
// (1-d)*alpha <= d*beta, the same predicate as alpha/(alpha+beta) <= d but
// exactly invariant under uniform scaling of both counters.
bool deviation_test(const ReputationState& state, double d);

// Whether max{1,omega}*alpha + beta <= max{1,omega}/(1-u), the invariant
// region of the update rule, with relative slack `tol` for rounding.
bool within_triangle(const ReputationState& state, double omega, double u,
                     double tol = 1e-9);

} // namespace repsim
