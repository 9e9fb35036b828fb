#include "repsim/params.hpp"

#include <cmath>

#include "repsim/errors.hpp"

namespace repsim {

namespace {

void require_finite(const char* field, double value) {
    if (!std::isfinite(value)) throw NonFiniteError(field);
}

} // namespace

ModelParams::ModelParams(double theta, double p, double d, double omega, double u)
    : theta_(theta), p_(p), pbar_(1.0 - p), d_(d), omega_(omega), u_(u) {
    require_finite("theta", theta);
    require_finite("p", p);
    require_finite("d", d);
    require_finite("omega", omega);
    require_finite("u", u);
    if (theta < 0.0 || theta > 1.0)
        throw OutOfRangeError("theta", "must lie in [0, 1]");
    if (p < 0.0 || p > 1.0) throw OutOfRangeError("p", "must lie in [0, 1]");
    if (d <= 0.0 || d >= 1.0) throw OutOfRangeError("d", "must lie in (0, 1)");
    if (omega <= 0.0) throw OutOfRangeError("omega", "must be positive");
    if (u <= 0.0 || u >= 1.0) throw OutOfRangeError("u", "must lie in (0, 1)");
}

ModelParams validate_params(double theta, double p, double d, double omega, double u) {
    return ModelParams(theta, p, d, omega, u);
}

ModelParams validate_params(const ModelParams& params) {
    return ModelParams(params.theta(), params.p(), params.d(), params.omega(),
                       params.u());
}

} // namespace repsim
