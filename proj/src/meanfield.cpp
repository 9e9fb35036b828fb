#include "repsim/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "repsim/errors.hpp"

namespace repsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Signed distance surrogate for the deviation line: zero on the line,
// positive above (reputation > d), negative below.
double line_value(const Vector2d& point, double d) {
    return (1.0 - d) * point.x() - d * point.y();
}

double rate_of(const ModelParams& params) { return 1.0 - params.u(); }

Vector2d region_asymptote(Region region, const ModelParams& params) {
    const double rate = rate_of(params);
    const double a = params.p() * params.theta() / rate;
    double b = params.p() * (1.0 - params.theta());
    if (region == Region::Below) b += params.omega() * params.pbar();
    return {a, b / rate};
}

Vector2d rhs_in_region(const Vector2d& point, Region region,
                       const ModelParams& params) {
    const double rate = rate_of(params);
    double dbeta = -rate * point.y() + params.p() * (1.0 - params.theta());
    if (region == Region::Below) dbeta += params.omega() * params.pbar();
    return {-rate * point.x() + params.p() * params.theta(), dbeta};
}

} // namespace

std::string_view to_string(Region region) {
    return region == Region::Above ? "above" : "below";
}

Region region_of(const Vector2d& point, double d) {
    return line_value(point, d) <= 0.0 ? Region::Below : Region::Above;
}

Vector2d ode_rhs(const Vector2d& point, const ModelParams& params) {
    if (point.x() + point.y() <= 0.0)
        throw NumericalError("degenerate state: alpha + beta = 0");
    return rhs_in_region(point, region_of(point, params.d()), params);
}

Segment segment_solution(const Vector2d& initial, Region region,
                         const ModelParams& params) {
    Segment segment;
    segment.t_start = 0.0;
    segment.t_end = kInf;
    segment.region = region;
    segment.decay = rate_of(params);
    segment.asymptote = region_asymptote(region, params);
    segment.c = initial - segment.asymptote;
    return segment;
}

std::optional<double> crossing_time(const Segment& segment, double d) {
    const double big_c = line_value(segment.c, d);
    const double big_k = line_value(segment.asymptote, d);
    if (big_c == 0.0) return std::nullopt;  // constant switching function
    const double ratio = -big_k / big_c;
    if (!(ratio > 0.0 && ratio < 1.0)) return std::nullopt;
    // The exit direction is the sign of K (the value the switching function
    // decays to): leaving Below needs K > 0, leaving Above needs K < 0.
    if (segment.region == Region::Below && big_k <= 0.0) return std::nullopt;
    if (segment.region == Region::Above && big_k >= 0.0) return std::nullopt;
    return -std::log(ratio) / segment.decay;
}

Vector2d PiecewiseSolution::eval(double t) const {
    if (segments.empty()) throw NumericalError("empty piecewise solution");
    double clamped = std::clamp(t, segments.front().t_start, t_end);
    // Segments are few (crossing cap is small); scan for the owner.
    for (const Segment& segment : segments) {
        if (clamped < segment.t_end) return segment.eval(clamped);
    }
    return segments.back().eval(clamped);
}

double PiecewiseSolution::reputation_at(double t) const {
    const Vector2d point = eval(t);
    return point.x() / (point.x() + point.y());
}

std::vector<double> PiecewiseSolution::crossing_times() const {
    std::vector<double> times;
    for (std::size_t i = 1; i < segments.size(); ++i)
        times.push_back(segments[i].t_start);
    return times;
}

PiecewiseSolution solve(const Vector2d& initial, const ModelParams& params,
                        double t_end, std::size_t max_crossings) {
    validate_params(params);
    if (!(t_end > 0.0)) throw OutOfRangeError("t_end", "must be positive");
    if (initial.x() < 0.0 || initial.y() < 0.0 || initial.x() + initial.y() <= 0.0)
        throw OutOfRangeError("initial", "must be a valid counter pair");

    const double d = params.d();
    Region region = region_of(initial, d);
    if (line_value(initial, d) == 0.0) {
        // Start exactly on the line: the line belongs to Below, so follow the
        // Below field unless it immediately pushes the state above.
        const Vector2d flow = rhs_in_region(initial, Region::Below, params);
        region = line_value(flow, d) > 0.0 ? Region::Above : Region::Below;
    }

    PiecewiseSolution solution;
    solution.t_end = t_end;
    Vector2d state = initial;
    double t = 0.0;
    std::size_t crossings = 0;
    while (true) {
        Segment segment = segment_solution(state, region, params);
        segment.t_start = t;
        segment.t_end = kInf;
        const std::optional<double> exit_tau = crossing_time(segment, d);
        if (!exit_tau || t + *exit_tau >= t_end) {
            segment.t_end = t_end;
            solution.segments.push_back(segment);
            break;
        }
        segment.t_end = t + *exit_tau;
        solution.segments.push_back(segment);
        state = segment.eval_local(*exit_tau);
        t = segment.t_end;
        region = region == Region::Above ? Region::Below : Region::Above;
        if (++crossings > max_crossings)
            throw NumericalError("chattering: crossing cap exceeded");
    }
    return solution;
}

std::string_view to_string(FixedPointKind kind) {
    return kind == FixedPointKind::TruePoint ? "true" : "false";
}

std::vector<FixedPoint> fixed_points(const ModelParams& params) {
    const double rate = rate_of(params);
    const double theta = params.theta();
    const double d = params.d();
    std::vector<FixedPoint> points;
    if (theta > d) {
        FixedPoint truth;
        truth.location = {params.p() * theta / rate,
                          params.p() * (1.0 - theta) / rate};
        truth.reputation_value = theta;
        truth.kind = FixedPointKind::TruePoint;
        truth.region = Region::Above;
        points.push_back(truth);
    }
    const bool false_exists =
        theta <= d ||
        params.pbar() >= (theta - d) / (theta - d + params.omega() * d);
    if (false_exists) {
        FixedPoint lie;
        lie.location = {params.p() * theta / rate,
                        (params.p() * (1.0 - theta) +
                         params.omega() * params.pbar()) /
                            rate};
        lie.reputation_value = false_reputation(params);
        lie.kind = FixedPointKind::FalsePoint;
        lie.region = Region::Below;
        points.push_back(lie);
    }
    return points;
}

std::optional<double> critical_pbar(double theta, double d, double omega) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > 1.0)
        throw OutOfRangeError("theta", "must lie in [0, 1]");
    if (!std::isfinite(d) || d <= 0.0 || d >= 1.0)
        throw OutOfRangeError("d", "must lie in (0, 1)");
    if (!std::isfinite(omega) || omega <= 0.0)
        throw OutOfRangeError("omega", "must be positive");
    if (theta <= d) return std::nullopt;
    return (theta - d) / (theta - d + omega * d);
}

CriticalD critical_d(const ModelParams& params) {
    return {false_reputation(params), params.theta()};
}

double false_reputation(const ModelParams& params) {
    // No lying means no false branch: pi degenerates to theta exactly.
    if (params.pbar() == 0.0) return params.theta();
    const double denom = params.p() + params.omega() * params.pbar();
    if (denom <= 0.0)
        throw NumericalError("degenerate denominator: p + omega*pbar = 0");
    return params.p() * params.theta() / denom;
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Bistable: return "bistable";
        case Regime::FalseOnly: return "false_only";
    }
    return "unknown";
}

RegimeReport classify_regime(const ModelParams& params) {
    RegimeReport report;
    report.pbar_critical = critical_pbar(params.theta(), params.d(), params.omega());
    const CriticalD thresholds = critical_d(params);
    report.d_c1 = thresholds.d_c1;
    report.d_c2 = thresholds.d_c2;
    report.fixed_points = fixed_points(params);
    report.two_sided_unique = two_sided_unique(params);
    if (!report.pbar_critical) {
        report.regime = Regime::FalseOnly;
    } else if (params.pbar() < *report.pbar_critical) {
        report.regime = Regime::Subcritical;
    } else {
        report.regime = Regime::Bistable;
    }
    return report;
}

bool two_sided_unique(const ModelParams& params) {
    const double m = std::min(params.theta(), 1.0 - params.theta());
    if (m <= params.d()) return false;
    return params.pbar() < (m - params.d()) / (m - params.d() + params.omega() * params.d());
}

} // namespace repsim
