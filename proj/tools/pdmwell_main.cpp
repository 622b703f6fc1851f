#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdmwell/io.hpp"
#include "pdmwell/model.hpp"
#include "pdmwell/oracle.hpp"
#include "pdmwell/spectrum.hpp"
#include "pdmwell/sweep.hpp"
#include "pdmwell/wavefunction.hpp"

namespace {

using namespace pdmwell;

struct ConfigFlags {
    double m1 = 1.0, m2 = 1.0, V1 = 1.0, V2 = 1.0, a = 1.0;
    std::string config_path;
    CLI::Option* opt_m1 = nullptr;
    CLI::Option* opt_m2 = nullptr;
    CLI::Option* opt_V1 = nullptr;
    CLI::Option* opt_V2 = nullptr;
    CLI::Option* opt_a = nullptr;

    void add(CLI::App* cmd) {
        opt_m1 = cmd->add_option("--m1", m1, "mass outside the well");
        opt_m2 = cmd->add_option("--m2", m2, "mass inside the well");
        opt_V1 = cmd->add_option("--V1", V1, "left barrier height");
        opt_V2 = cmd->add_option("--V2", V2, "right barrier height");
        opt_a = cmd->add_option("--a", a, "half-width of the well");
        cmd->add_option("--config", config_path, "key-value config file");
    }

    // Flags given on the command line override file values.
    WellConfig resolve() const {
        WellConfig c;
        if (!config_path.empty()) c = parse_config_file(config_path);
        if (opt_m1->count()) c.m1 = m1;
        if (opt_m2->count()) c.m2 = m2;
        if (opt_V1->count()) c.V1 = V1;
        if (opt_V2->count()) c.V2 = V2;
        if (opt_a->count()) c.a = a;
        if (config_path.empty()) {
            c.m1 = m1; c.m2 = m2; c.V1 = V1; c.V2 = V2; c.a = a;
        }
        return validate(c);
    }
};

int cmd_spectrum(const ConfigFlags& flags, const std::string& csv_path) {
    const WellConfig c = flags.resolve();
    const Spectrum s = energy_levels_asymmetric(c);

    std::cout << "N=" << s.states.size() << "\n";
    if (!s.states.empty()) {
        std::cout << "n parity E k1 k2 k3 theta\n";
        for (const BoundState& st : s.states)
            std::cout << st.n << ' ' << to_string(st.parity) << ' '
                      << format_table(st.E) << ' ' << format_table(st.k1) << ' '
                      << format_table(st.k2) << ' ' << format_table(st.k3) << ' '
                      << format_table(st.theta) << "\n";
    }
    if (!csv_path.empty()) {
        std::ostringstream out;
        out << "n,parity,E,k1,k2,k3,theta\n";
        for (const BoundState& st : s.states)
            out << st.n << ',' << to_string(st.parity) << ','
                << format_full(st.E) << ',' << format_full(st.k1) << ','
                << format_full(st.k2) << ',' << format_full(st.k3) << ','
                << format_full(st.theta) << '\n';
        atomic_write(csv_path, out.str());
    }
    return 0;
}

int cmd_critical(const ConfigFlags& flags, const std::string& which,
                 int nmax, const std::string& csv_path) {
    if (nmax < 1) throw Error("--nmax must be at least 1");
    const WellConfig c = flags.resolve();

    std::vector<double> values;
    for (int n = 1; n <= nmax; ++n) {
        if (which == "width")
            values.push_back(critical_width(c.m1, c.m2, c.V1, c.V2, n));
        else if (which == "inside-mass")
            values.push_back(critical_inside_mass(c.m1, c.V1, c.V2, c.a, n));
        else if (which == "symmetric-mass")
            values.push_back(critical_mass_symmetric(c.V1, c.a, n));
        else
            throw Error("--which must be width, inside-mass or symmetric-mass");
    }

    std::cout << "N " << (which == "width" ? "a" : "m2") << "\n";
    for (int n = 1; n <= nmax; ++n)
        std::cout << n << ' ' << format_table(values[n - 1]) << "\n";
    if (!csv_path.empty()) {
        std::ostringstream out;
        out << "N,value\n";
        for (int n = 1; n <= nmax; ++n)
            out << n << ',' << format_full(values[n - 1]) << '\n';
        atomic_write(csv_path, out.str());
    }
    return 0;
}

int cmd_sweep(const ConfigFlags& flags, const std::string& param,
              double start, double stop, int steps,
              const std::string& csv_path, const std::string& svg_path) {
    SweepSpec spec;
    spec.parameter = parse_sweep_parameter(param);
    spec.start = start;
    spec.stop = stop;
    spec.steps = steps;
    spec.fixed = flags.resolve();

    const SweepResult result = run_sweep(spec);
    const std::string csv = sweep_csv(result);
    if (csv_path.empty()) std::cout << csv;
    else atomic_write(csv_path, csv);
    if (!svg_path.empty()) atomic_write(svg_path, sweep_svg(result));
    return 0;
}

int cmd_wavefunction(const ConfigFlags& flags, int steps,
                     const std::string& csv_path) {
    if (steps < 2) throw Error("--steps must be at least 2");
    const WellConfig c = flags.resolve();
    const Spectrum s = energy_levels_asymmetric(c);

    std::ostringstream out;
    out << "n,x,psi,phi\n";
    for (const BoundState& st : s.states) {
        const PiecewiseWavefunction wf = PiecewiseWavefunction::build(c, st);
        const double margin = 8.0 / std::min(st.k1, st.k3);
        for (const TabulatedPoint& p :
             wf.tabulate(-(c.a + margin), c.a + margin, steps))
            out << st.n << ',' << format_full(p.x) << ',' << format_full(p.psi)
                << ',' << format_full(p.phi) << '\n';
    }
    if (csv_path.empty()) std::cout << out.str();
    else atomic_write(csv_path, out.str());
    return 0;
}

void append_report(std::ostringstream& out, const CrossValidationReport& r) {
    for (const CrossValidationRow& row : r.rows)
        out << format_full(r.config.m1) << ',' << format_full(r.config.m2) << ','
            << format_full(r.config.V1) << ',' << format_full(r.config.V2) << ','
            << format_full(r.config.a) << ',' << row.n << ','
            << format_full(row.E_trans) << ',' << format_full(row.E_fd) << ','
            << format_full(row.E_shoot) << ',' << format_full(row.max_delta)
            << '\n';
}

int cmd_verify(const ConfigFlags& flags, bool has_config_input,
               std::uint64_t seed, int count, double tol,
               const std::string& csv_path) {
    std::vector<WellConfig> configs;
    if (has_config_input) configs.push_back(flags.resolve());
    else configs = random_configs(seed, count);

    std::ostringstream out;
    out << "m1,m2,V1,V2,a,n,E_trans,E_fd,E_shoot,max_delta\n";
    int mismatches = 0;
    for (const WellConfig& c : configs) {
        try {
            append_report(out, cross_validate(c, tol));
        } catch (const ValidationMismatch& e) {
            append_report(out, e.report());
            std::cerr << "mismatch: " << e.what() << "\n";
            ++mismatches;
        }
    }
    if (csv_path.empty()) std::cout << out.str();
    else atomic_write(csv_path, out.str());
    std::cout << "verified " << configs.size() << " configs, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of square wells with position-dependent mass"};
    app.require_subcommand(1);

    ConfigFlags flags;
    std::string csv_path, svg_path;
    std::string which = "width";
    std::string param = "m2";
    double start = 0.0, stop = 0.0, tol = 1e-3;
    int steps = 100, nmax = 6, count = 100;
    std::uint64_t seed = 0;

    CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state table");
    flags.add(spectrum);
    spectrum->add_option("--csv", csv_path, "CSV output path");

    ConfigFlags critical_flags;
    CLI::App* critical = app.add_subcommand("critical", "critical parameter values");
    critical_flags.add(critical);
    critical->add_option("--which", which, "width | inside-mass | symmetric-mass");
    critical->add_option("--nmax", nmax, "largest bound-state count");
    critical->add_option("--csv", csv_path, "CSV output path");

    ConfigFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/SVG");
    sweep_flags.add(sweep);
    sweep->add_option("--param", param, "a | m1 | m2 | V1 | V2");
    sweep->add_option("--start", start)->required();
    sweep->add_option("--stop", stop)->required();
    sweep->add_option("--steps", steps, "number of sweep points");
    sweep->add_option("--csv", csv_path, "CSV output path (stdout if absent)");
    sweep->add_option("--svg", svg_path, "SVG plot output path");

    ConfigFlags wf_flags;
    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "tabulate psi and phi to CSV");
    wf_flags.add(wavefunction);
    wavefunction->add_option("--steps", steps, "samples per state");
    wavefunction->add_option("--csv", csv_path, "CSV output path");

    ConfigFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "oracle cross-validation");
    verify_flags.add(verify);
    verify->add_option("--seed", seed, "random config seed");
    verify->add_option("--count", count, "number of random configs");
    verify->add_option("--tol", tol, "energy agreement tolerance");
    verify->add_option("--csv", csv_path, "report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(flags, csv_path);
        if (critical->parsed())
            return cmd_critical(critical_flags, which, nmax, csv_path);
        if (sweep->parsed())
            return cmd_sweep(sweep_flags, param, start, stop, steps, csv_path,
                             svg_path);
        if (wavefunction->parsed())
            return cmd_wavefunction(wf_flags, steps, csv_path);
        if (verify->parsed()) {
            const bool has_config =
                !verify_flags.config_path.empty() || verify_flags.opt_m1->count()
                || verify_flags.opt_m2->count() || verify_flags.opt_V1->count()
                || verify_flags.opt_V2->count() || verify_flags.opt_a->count();
            return cmd_verify(verify_flags, has_config, seed, count, tol,
                              csv_path);
        }
    } catch (const NonPositiveParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BarrierOrder& e) {
        std::cerr << "error: " << e.what() << " (V2)\n";
        return 2;
    } catch (const NonFinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
