#include "repsim/state.hpp"

#include <algorithm>
#include <cmath>

#include "repsim/errors.hpp"

namespace repsim {

ReputationState::ReputationState(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
    if (!std::isfinite(alpha)) throw NonFiniteError("alpha");
    if (!std::isfinite(beta)) throw NonFiniteError("beta");
    if (alpha < 0.0) throw OutOfRangeError("alpha", "must be nonnegative");
    if (beta < 0.0) throw OutOfRangeError("beta", "must be nonnegative");
    if (alpha + beta <= 0.0)
        throw OutOfRangeError("alpha+beta", "must be positive");
}

ReputationState initial_state(double r0, double u) {
    if (!std::isfinite(r0)) throw NonFiniteError("R0");
    if (r0 < 0.0 || r0 > 1.0) throw OutOfRangeError("R0", "must lie in [0, 1]");
    if (!std::isfinite(u)) throw NonFiniteError("u");
    if (u <= 0.0 || u >= 1.0) throw OutOfRangeError("u", "must lie in (0, 1)");
    const double one_minus_u = 1.0 - u;
    return ReputationState(r0 / one_minus_u, (1.0 - r0) / one_minus_u);
}

double reputation(const ReputationState& state) {
    const double total = state.alpha() + state.beta();
    if (total <= 0.0)
        throw NumericalError("degenerate state: alpha + beta = 0");
    return state.alpha() / total;
}

bool deviation_test(const ReputationState& state, double d) {
    if (d <= 0.0 || d >= 1.0 || !std::isfinite(d))
        throw OutOfRangeError("d", "must lie in (0, 1)");
    return (1.0 - d) * state.alpha() <= d * state.beta();
}

bool within_triangle(const ReputationState& state, double omega, double u,
                     double tol) {
    const double m = std::max(1.0, omega);
    const double bound = m / (1.0 - u);
    return m * state.alpha() + state.beta() <= bound * (1.0 + tol);
}

} // namespace repsim
