#include "svg.hpp"

#include <algorithm>
#include <cmath>

#include "textio.hpp"

namespace repsim::cli {

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 600;
constexpr int kLeft = 70;
constexpr int kRight = 24;
constexpr int kTop = 40;
constexpr int kBottom = 52;

struct Canvas {
    double x_min, x_max, y_min, y_max;
    std::string body;

    double px(double x) const {
        return kLeft + (x - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom -
               (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
    }

    static std::string num(double v) { return format_double_prec(v, 6); }

    void polyline(const std::vector<std::pair<double, double>>& points,
                  const char* color, double width, bool dashed) {
        if (points.size() < 2) return;
        body += "<polyline fill=\"none\" stroke=\"";
        body += color;
        body += "\" stroke-width=\"";
        body += num(width);
        body += '"';
        if (dashed) body += " stroke-dasharray=\"6,5\"";
        body += " points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) body += ' ';
            body += num(px(points[i].first));
            body += ',';
            body += num(py(points[i].second));
        }
        body += "\"/>\n";
    }

    void hline(double y, const char* color, bool dashed) {
        polyline({{x_min, y}, {x_max, y}}, color, 1.0, dashed);
    }

    void vline(double x, const char* color, bool dashed) {
        polyline({{x, y_min}, {x, y_max}}, color, 1.0, dashed);
    }

    void text(double x_pixel, double y_pixel, const std::string& content,
              const char* anchor, int size = 13) {
        body += "<text x=\"";
        body += num(x_pixel);
        body += "\" y=\"";
        body += num(y_pixel);
        body += "\" font-family=\"sans-serif\" font-size=\"";
        body += std::to_string(size);
        body += "\" text-anchor=\"";
        body += anchor;
        body += "\">";
        body += content;
        body += "</text>\n";
    }

    void axes(const std::string& x_label, const std::string& y_label,
              const std::string& title) {
        body += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
                num(kWidth - kLeft - kRight) + "\" height=\"" +
                num(kHeight - kTop - kBottom) +
                "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        constexpr int kTicks = 5;
        for (int i = 0; i <= kTicks; ++i) {
            const double fx = x_min + (x_max - x_min) * i / kTicks;
            const double fy = y_min + (y_max - y_min) * i / kTicks;
            body += "<line x1=\"" + num(px(fx)) + "\" y1=\"" +
                    num(kHeight - kBottom) + "\" x2=\"" + num(px(fx)) +
                    "\" y2=\"" + num(kHeight - kBottom + 5) +
                    "\" stroke=\"black\"/>\n";
            text(px(fx), kHeight - kBottom + 20, format_double_prec(fx, 4), "middle", 12);
            body += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(fy)) +
                    "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(py(fy)) +
                    "\" stroke=\"black\"/>\n";
            text(kLeft - 9, py(fy) + 4, format_double_prec(fy, 4), "end", 12);
        }
        text((kLeft + kWidth - kRight) / 2.0, kHeight - 12, x_label, "middle");
        text(16, kTop - 14, y_label, "start");
        text((kLeft + kWidth - kRight) / 2.0, 22, title, "middle", 15);
    }

    std::string render() const {
        std::string out =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
            std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
            "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
            std::to_string(kHeight) + "\">\n";
        out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

} // namespace

std::string overlay_svg(const PiecewiseSolution& solution,
                        const Trajectory& trajectory,
                        const ModelParams& params) {
    Canvas canvas{0.0, solution.t_end, 0.0, 1.0, {}};

    std::vector<std::pair<double, double>> sim_points;
    const std::size_t stride =
        std::max<std::size_t>(1, trajectory.steps.size() / 2000);
    for (std::size_t i = 0; i < trajectory.steps.size(); i += stride) {
        const StepRecord& record = trajectory.steps[i];
        if (record.t <= solution.t_end)
            sim_points.emplace_back(record.t, reputation_of_record(record));
    }
    canvas.polyline(sim_points, "#9a9a9a", 0.8, false);

    std::vector<std::pair<double, double>> curve;
    constexpr int kSamples = 512;
    for (int i = 0; i <= kSamples; ++i) {
        const double t = solution.t_end * i / kSamples;
        curve.emplace_back(t, solution.reputation_at(t));
    }
    canvas.polyline(curve, "#1f4fd8", 1.8, false);

    canvas.hline(params.theta(), "#c02020", true);
    canvas.hline(false_reputation(params), "#208020", true);
    canvas.axes("t", "R", "reputation: simulated path and mean-field solution");
    return canvas.render();
}

std::string bifurcation_svg(const SweepResult& result, const ModelParams& base) {
    double x_min = result.grid.front();
    double x_max = result.grid.back();
    if (x_min == x_max) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    Canvas canvas{x_min, x_max, 0.0, 1.0, {}};

    // Branch value as a function of the swept parameter, whether or not the
    // branch exists there.
    const auto true_value = [&](double) { return base.theta(); };
    const auto false_value = [&](double v) {
        if (result.parameter == SweptParameter::Pbar) {
            const ModelParams row(base.theta(), 1.0 - v, base.d(), base.omega(), base.u());
            return false_reputation(row);
        }
        return false_reputation(base);  // pi does not depend on d
    };

    const auto draw_branch = [&](bool want_true, const char* color) {
        std::vector<std::pair<double, double>> run;
        bool run_present = false;
        const auto flush = [&] {
            if (run.size() >= 2)
                canvas.polyline(run, color, run_present ? 2.0 : 1.2, !run_present);
            run.clear();
        };
        for (std::size_t i = 0; i < result.rows.size(); ++i) {
            const SweepRow& row = result.rows[i];
            const bool present = want_true ? row.rep_true.has_value()
                                           : row.rep_false.has_value();
            const double value = want_true ? true_value(row.value)
                                           : false_value(row.value);
            if (run.empty() || present == run_present) {
                run.emplace_back(row.value, value);
                run_present = present;
            } else {
                run.emplace_back(row.value, value);
                flush();
                run.emplace_back(row.value, value);
                run_present = present;
            }
        }
        flush();
    };
    draw_branch(true, "#c02020");
    draw_branch(false, "#208020");

    if (result.parameter == SweptParameter::D) {
        canvas.vline(false_reputation(base), "#777777", true);
        canvas.vline(base.theta(), "#777777", true);
    } else if (const auto pc = critical_pbar(base.theta(), base.d(), base.omega())) {
        canvas.vline(*pc, "#777777", true);
    }

    const std::string x_label(to_string(result.parameter));
    canvas.axes(x_label, "fixed-point reputation",
                "fixed-point branches along the " + x_label + " sweep");
    return canvas.render();
}

} // namespace repsim::cli
