#ifndef PDMWELL_SWEEP_HPP
#define PDMWELL_SWEEP_HPP

#include <string>
#include <vector>

#include "pdmwell/model.hpp"

// Parameter sweeps over one well parameter: compute the spectrum at
// every grid point, emit CSV (one row per level) and an SVG line plot
// with one polyline per level.

namespace pdmwell {

enum class SweepParameter { HalfWidth, MassOutside, MassInside, BarrierLeft, BarrierRight };

SweepParameter parse_sweep_parameter(const std::string& name);
std::string to_string(SweepParameter p);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::MassInside;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;
    WellConfig fixed; // template; the swept field is overwritten
};

struct SweepRow {
    double value = 0.0;
    int count = 0;
    std::vector<double> energies;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    std::string tool_version;
    std::string timestamp; // in-memory only; never serialized
};

/// The spec's template config with the swept parameter set to `value`,
/// validated.
WellConfig config_at(const SweepSpec& spec, double value);

/// Validates the spec (start < stop, steps >= 2, every point passes
/// model validation) and computes all rows. Work fans out to a thread
/// pool; rows are ordered by parameter value regardless of completion
/// order.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV with header `param,n,E`, 12 significant digits, LF endings.
std::string sweep_csv(const SweepResult& result);

/// Self-contained SVG line plot, energy versus parameter, one polyline
/// per level, broken where a level is absent.
std::string sweep_svg(const SweepResult& result);

} // namespace pdmwell

#endif
