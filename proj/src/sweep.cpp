#include "pdmwell/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "pdmwell/io.hpp"
#include "pdmwell/spectrum.hpp"

namespace pdmwell {

SweepParameter parse_sweep_parameter(const std::string& name) {
    if (name == "a") return SweepParameter::HalfWidth;
    if (name == "m1") return SweepParameter::MassOutside;
    if (name == "m2") return SweepParameter::MassInside;
    if (name == "V1") return SweepParameter::BarrierLeft;
    if (name == "V2") return SweepParameter::BarrierRight;
    throw Error("unknown sweep parameter: " + name);
}

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::HalfWidth: return "a";
        case SweepParameter::MassOutside: return "m1";
        case SweepParameter::MassInside: return "m2";
        case SweepParameter::BarrierLeft: return "V1";
        default: return "V2";
    }
}

WellConfig config_at(const SweepSpec& spec, double value) {
    WellConfig c = spec.fixed;
    switch (spec.parameter) {
        case SweepParameter::HalfWidth: c.a = value; break;
        case SweepParameter::MassOutside: c.m1 = value; break;
        case SweepParameter::MassInside: c.m2 = value; break;
        case SweepParameter::BarrierLeft: c.V1 = value; break;
        case SweepParameter::BarrierRight: c.V2 = value; break;
    }
    return validate(c);
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (!(spec.start < spec.stop)) throw Error("sweep requires start < stop");
    if (spec.steps < 2) throw Error("sweep requires at least 2 steps");

    const double step = (spec.stop - spec.start) / (spec.steps - 1);
    std::vector<double> values(static_cast<std::size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) values[i] = spec.start + i * step;
    // Every point must satisfy the model invariants before any work runs.
    for (double v : values) (void)config_at(spec, v);

    SweepResult result;
    result.spec = spec;
    result.tool_version = "pdmwell 1.0";
    result.rows.resize(values.size());

    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(values.size()));
    auto work = [&](unsigned first) {
        for (std::size_t i = first; i < values.size(); i += workers) {
            const Spectrum s = energy_levels_asymmetric(config_at(spec, values[i]));
            SweepRow row;
            row.value = values[i];
            row.count = static_cast<int>(s.states.size());
            for (const BoundState& st : s.states) row.energies.push_back(st.E);
            result.rows[i] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "param,n,E\n";
    for (const SweepRow& row : result.rows)
        for (std::size_t n = 0; n < row.energies.size(); ++n)
            out << format_full(row.value) << ',' << (n + 1) << ','
                << format_full(row.energies[n]) << '\n';
    return out.str();
}

namespace {

struct PlotFrame {
    static constexpr double width = 800.0, height = 560.0;
    static constexpr double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
    double x_lo, x_hi, y_lo, y_hi;

    double px(double x) const {
        return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right);
    }
    double py(double y) const {
        return height - bottom
            - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom);
    }
};

} // namespace

std::string sweep_svg(const SweepResult& result) {
    int max_levels = 0;
    double e_max = 0.0;
    for (const SweepRow& row : result.rows) {
        max_levels = std::max(max_levels, row.count);
        for (double e : row.energies) e_max = std::max(e_max, e);
    }

    PlotFrame f{result.spec.start, result.spec.stop, 0.0,
                e_max > 0.0 ? e_max * 1.05 : 1.0};
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << PlotFrame::width
        << "\" height=\"" << PlotFrame::height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes and ticks
    out << "<line x1=\"" << f.px(f.x_lo) << "\" y1=\"" << f.py(f.y_lo)
        << "\" x2=\"" << f.px(f.x_hi) << "\" y2=\"" << f.py(f.y_lo)
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << f.px(f.x_lo) << "\" y1=\"" << f.py(f.y_lo)
        << "\" x2=\"" << f.px(f.x_lo) << "\" y2=\"" << f.py(f.y_hi)
        << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double xv = f.x_lo + t * (f.x_hi - f.x_lo) / 5.0;
        const double yv = f.y_lo + t * (f.y_hi - f.y_lo) / 5.0;
        out << "<text x=\"" << f.px(xv) << "\" y=\"" << f.py(f.y_lo) + 18
            << "\" font-size=\"11\" text-anchor=\"middle\">"
            << format_table(xv) << "</text>\n"
            << "<text x=\"" << f.px(f.x_lo) - 6 << "\" y=\"" << f.py(yv) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">"
            << format_table(yv) << "</text>\n";
    }
    out << "<text x=\"" << (PlotFrame::width + PlotFrame::left) / 2.0 << "\" y=\""
        << PlotFrame::height - 10 << "\" font-size=\"13\" text-anchor=\"middle\">"
        << to_string(result.spec.parameter) << "</text>\n"
        << "<text x=\"16\" y=\"" << PlotFrame::height / 2.0
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << PlotFrame::height / 2.0 << ")\">E</text>\n";

    // one polyline per level, broken where the level is absent
    for (int n = 1; n <= max_levels; ++n) {
        const char* color = colors[(n - 1) % 8];
        bool open = false;
        std::ostringstream points;
        auto flush = [&]() {
            if (open)
                out << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"" << points.str()
                    << "\"/>\n";
            points.str("");
            open = false;
        };
        for (const SweepRow& row : result.rows) {
            if (row.count >= n) {
                points << f.px(row.value) << ',' << f.py(row.energies[n - 1]) << ' ';
                open = true;
            } else {
                flush();
            }
        }
        flush();
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace pdmwell
