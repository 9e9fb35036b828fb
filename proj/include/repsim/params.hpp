#pragma once

namespace repsim {

// The five system parameters plus the derived indirect-observation
// probability pbar = 1 - p.
//
//   theta  probability of positive subject behaviour, in [0, 1]
//   p      probability that an observation is direct, in [0, 1]
//   d      deviation-test threshold, in (0, 1)
//   omega  weight of an accepted indirect observation, > 0
//   u      per-event discount factor, in (0, 1)
class ModelParams {
public:
    // Validates every range; throws OutOfRangeError or NonFiniteError.
    ModelParams(double theta, double p, double d, double omega, double u);

    double theta() const noexcept { return theta_; }
    double p() const noexcept { return p_; }
    double pbar() const noexcept { return pbar_; }
    double d() const noexcept { return d_; }
    double omega() const noexcept { return omega_; }
    double u() const noexcept { return u_; }

private:
    double theta_;
    double p_;
    double pbar_;
    double d_;
    double omega_;
    double u_;
};

ModelParams validate_params(double theta, double p, double d, double omega, double u);

// Re-validation of an already-constructed value; returns it unchanged.
ModelParams validate_params(const ModelParams& params);

} // namespace repsim
