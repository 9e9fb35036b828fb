#include "csv.hpp"

#include "textio.hpp"

namespace repsim::cli {

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string out = "step,t,alpha,beta,R,event,accepted\n";
    out.reserve(out.size() + trajectory.steps.size() * 64);
    for (const StepRecord& record : trajectory.steps) {
        out += format_u64(record.step);
        out += ',';
        if (trajectory.config.record_timestamps) out += format_double(record.t);
        out += ',';
        out += format_double(record.alpha);
        out += ',';
        out += format_double(record.beta);
        out += ',';
        out += format_double(reputation_of_record(record));
        out += ',';
        out += to_string(record.event);
        out += ',';
        out += record.accepted ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "swept_value,regime,n_fixed_points,rep_true,rep_false\n";
    for (const SweepRow& row : result.rows) {
        out += format_double(row.value);
        out += ',';
        out += to_string(row.report.regime);
        out += ',';
        out += format_u64(row.report.fixed_points.size());
        out += ',';
        if (row.rep_true) out += format_double(*row.rep_true);
        out += ',';
        if (row.rep_false) out += format_double(*row.rep_false);
        out += '\n';
    }
    return out;
}

std::string ode_segments_csv(const PiecewiseSolution& solution) {
    std::string out =
        "index,t_start,t_end,region,c_alpha,c_beta,asymptote_alpha,asymptote_beta\n";
    std::uint64_t index = 0;
    for (const Segment& segment : solution.segments) {
        out += format_u64(index++);
        out += ',';
        out += format_double(segment.t_start);
        out += ',';
        out += format_double(segment.t_end);
        out += ',';
        out += to_string(segment.region);
        out += ',';
        out += format_double(segment.c.x());
        out += ',';
        out += format_double(segment.c.y());
        out += ',';
        out += format_double(segment.asymptote.x());
        out += ',';
        out += format_double(segment.asymptote.y());
        out += '\n';
    }
    return out;
}

std::string ode_samples_csv(const PiecewiseSolution& solution, std::uint64_t samples) {
    std::string out = "t,alpha,beta,R\n";
    const std::uint64_t n = samples < 2 ? 2 : samples;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double t = solution.t_end * static_cast<double>(i) /
                         static_cast<double>(n - 1);
        const Vector2d point = solution.eval(t);
        out += format_double(t);
        out += ',';
        out += format_double(point.x());
        out += ',';
        out += format_double(point.y());
        out += ',';
        out += format_double(point.x() / (point.x() + point.y()));
        out += '\n';
    }
    return out;
}

} // namespace repsim::cli
