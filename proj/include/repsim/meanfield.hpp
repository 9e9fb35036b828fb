#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "repsim/params.hpp"

namespace repsim {

// Mean-field points (alpha, beta) live in the plane; Vector2d keeps the
// segment arithmetic expression-friendly.
using Vector2d = Eigen::Vector2d;

// Side of the deviation line alpha/(alpha+beta) = d. The line itself belongs
// to Below, matching the deviation test in the stochastic process.
enum class Region { Above, Below };

std::string_view to_string(Region region);

Region region_of(const Vector2d& point, double d);

// Right-hand side of the mean ODE:
//   dalpha = (u-1) alpha + p theta
//   dbeta  = (u-1) beta  + p (1-theta) + omega pbar [alpha/(alpha+beta) <= d]
Vector2d ode_rhs(const Vector2d& point, const ModelParams& params);

// One exponential piece of the exact solution, valid while the trajectory
// stays on one side of the line:
//   x(t) = c * exp(-(1-u)(t - t_start)) + asymptote,  componentwise.
struct Segment {
    double t_start = 0.0;
    double t_end = 0.0;  // +inf while open
    Region region = Region::Above;
    Vector2d c = Vector2d::Zero();
    Vector2d asymptote = Vector2d::Zero();
    double decay = 0.0;  // 1 - u

    // State at local time tau >= 0 since t_start.
    Vector2d eval_local(double tau) const {
        return c * std::exp(-decay * tau) + asymptote;
    }
    Vector2d eval(double t) const { return eval_local(t - t_start); }
};

// Builds the segment through `initial` under the given region's field. The
// alpha asymptote is p*theta/(1-u) in both regions; the beta asymptote gains
// omega*pbar/(1-u) below the line. c is fixed by the initial condition.
Segment segment_solution(const Vector2d& initial, Region region,
                         const ModelParams& params);

// Exact first exit time of the segment's region, measured from the segment
// start. The switching function f(t) = (1-d) alpha(t) - d beta(t) is a single
// exponential plus a constant because both components decay at the same rate,
// so the root is closed-form: t* = -ln(-K/C)/(1-u) with
// C = (1-d) c_alpha - d c_beta and K = (1-d) A_alpha - d A_beta.
// Returns nothing when the trajectory never leaves the region.
std::optional<double> crossing_time(const Segment& segment, double d);

struct PiecewiseSolution {
    std::vector<Segment> segments;  // contiguous; first starts at t = 0
    double t_end = 0.0;

    Vector2d eval(double t) const;
    double reputation_at(double t) const;
    // Times of the interior segment boundaries (region changes).
    std::vector<double> crossing_times() const;
};

// Event-driven exact integration from `initial` to t_end: build the current
// region's segment, cut it at the first crossing of the deviation line, flip
// the region, continue. Throws NumericalError after `max_crossings` region
// changes (transversal fields make that unreachable for this system; the cap
// guards the assumption).
PiecewiseSolution solve(const Vector2d& initial, const ModelParams& params,
                        double t_end, std::size_t max_crossings = 64);

enum class FixedPointKind { TruePoint, FalsePoint };

std::string_view to_string(FixedPointKind kind);

struct FixedPoint {
    Vector2d location = Vector2d::Zero();
    double reputation_value = 0.0;  // theta for the true point, pi for the false
    FixedPointKind kind = FixedPointKind::TruePoint;
    Region region = Region::Above;
};

// Equilibria of the mean ODE. The true point (p theta, p(1-theta))/(1-u)
// exists iff theta > d; the false point (p theta, p(1-theta)+omega pbar)/(1-u)
// exists iff theta <= d or pbar >= (theta-d)/(theta-d+omega d). At least one
// of the two always exists; the true point is listed first when both do.
std::vector<FixedPoint> fixed_points(const ModelParams& params);

// Critical lying probability (theta - d)/(theta - d + omega d) when
// theta > d; absent otherwise (no subcritical regime exists).
std::optional<double> critical_pbar(double theta, double d, double omega);

struct CriticalD {
    double d_c1;  // pi, below which the true point is the unique equilibrium
    double d_c2;  // theta, at or above which only the false point remains
};

CriticalD critical_d(const ModelParams& params);

// pi = p theta / (p + omega pbar), the reputation induced by accepted lies.
// Equals theta exactly when pbar = 0.
double false_reputation(const ModelParams& params);

enum class Regime { Subcritical, Bistable, FalseOnly };

std::string_view to_string(Regime regime);

struct RegimeReport {
    Regime regime = Regime::Subcritical;
    std::optional<double> pbar_critical;  // absent when theta <= d
    double d_c1 = 0.0;
    double d_c2 = 0.0;
    std::vector<FixedPoint> fixed_points;
    bool two_sided_unique = false;
};

// Subcritical iff theta > d and pbar < pbar_c (unique true point); Bistable
// iff theta > d and pbar >= pbar_c (both points); FalseOnly iff theta <= d.
RegimeReport classify_regime(const ModelParams& params);

// Uniqueness of the true point when liars may report extremely positive as
// well as extremely negative behaviour: min{theta, 1-theta} > d and pbar
// below the threshold obtained with theta replaced by that minimum.
bool two_sided_unique(const ModelParams& params);

} // namespace repsim
