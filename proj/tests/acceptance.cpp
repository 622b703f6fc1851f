// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any criterion fails. Kept separate from the unit tests so the gate
// can be run (and read) on its own.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "pdmwell/io.hpp"
#include "pdmwell/model.hpp"
#include "pdmwell/oracle.hpp"
#include "pdmwell/spectrum.hpp"
#include "pdmwell/sweep.hpp"
#include "pdmwell/wavefunction.hpp"

using namespace pdmwell;

namespace {

int g_failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void report(int index, const std::string& title, bool ok, double seconds,
            const std::string& detail) {
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%s, %.2f s)\n", ok ? "PASS" : "FAIL",
                index, title.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
}

struct Timer {
    double start = now_seconds();
    double elapsed() const { return now_seconds() - start; }
};

// configs whose bound states feed the matching-condition suite
std::vector<WellConfig> g_matching_configs;

void remember(const WellConfig& c) { g_matching_configs.push_back(c); }

template <typename F>
double bisect(F&& f, double lo, double hi, int iters = 200) {
    double f_lo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---- criterion 1: critical half-widths ------------------------------------

void criterion_1() {
    const Timer t;
    const double ref[3][6] = {
        {0.2176, 1.3283, 2.4390, 3.5498, 4.6605, 5.7712},  // m2 = 2
        {0.3927, 1.9635, 3.5343, 5.1051, 6.6759, 8.2469},  // m2 = 1
        {0.6755, 2.8970, 5.1184, 7.3398, 9.5613, 11.7827}, // m2 = 0.5
    };
    const double m2s[3] = {2.0, 1.0, 0.5};
    int ok_count = 0;
    double worst = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int n = 1; n <= 6; ++n) {
            const double a = critical_width(1.0, m2s[r], 1.0, 2.0, n);
            const double delta = std::abs(a - ref[r][n - 1]);
            worst = std::max(worst, delta);
            if (delta <= 5e-4) ++ok_count;
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/18 within 5e-4, worst |delta| %.2e",
                  ok_count, worst);
    report(1, "critical half-widths a(1)..a(6) for m2 in {2, 1, 0.5}",
           ok_count == 18 && t.elapsed() < 1.0, t.elapsed(), detail);
}

// ---- criterion 2: critical inside masses ----------------------------------

void criterion_2() {
    const Timer t;
    const double ref[2][6] = {
        {0.2899, 3.3189, 10.8186, 23.1821, 40.4642, 62.6758}, // m1 = 1
        {0.4618, 4.2715, 12.3087, 24.9461, 42.3710, 64.6628}, // m1 = 10
    };
    const double m1s[2] = {1.0, 10.0};
    int ok_count = 0;
    double worst = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int n = 1; n <= 6; ++n) {
            const double m2 = critical_inside_mass(m1s[r], 1.0, 2.0, 1.0, n);
            const double delta = std::abs(m2 - ref[r][n - 1]);
            worst = std::max(worst, delta);
            if (delta <= 5e-4) ++ok_count;
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/12 within 5e-4, worst |delta| %.2e",
                  ok_count, worst);
    report(2, "critical inside masses m2(1)..m2(6) for m1 in {1, 10}",
           ok_count == 12 && t.elapsed() < 1.0, t.elapsed(), detail);
}

// ---- criterion 3: symmetric critical masses --------------------------------

void criterion_3() {
    const Timer t;
    const double ref[6] = {0.0, 1.23, 4.93, 11.10, 19.74, 30.84};
    int ok_count = 0;
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const double m2 = critical_mass_symmetric(2.0, 1.0, n);
        const double delta = std::abs(m2 - ref[n - 1]);
        worst = std::max(worst, delta);
        if (delta <= 0.01) ++ok_count;
    }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/6 within 0.01, worst |delta| %.2e",
                  ok_count, worst);
    report(3, "symmetric-well critical masses for V = 2, a = 1",
           ok_count == 6 && t.elapsed() < 1e-3, t.elapsed(), detail);
}

// ---- criterion 4: oracle equivalence on randomized wells -------------------

void criterion_4() {
    const Timer t;
    const std::vector<WellConfig> configs = random_configs(101, 500);
    int passed = 0;
    double worst = 0.0;
    std::string first_failure;
    for (const WellConfig& c : configs) {
        remember(c);
        try {
            const CrossValidationReport r = cross_validate(c, 1e-3, 16000);
            for (const CrossValidationRow& row : r.rows)
                worst = std::max(worst, row.max_delta);
            if (r.pass) ++passed;
        } catch (const ValidationMismatch& e) {
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    std::string detail;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/500 configs agree, worst |dE| %.2e",
                  passed, worst);
    detail = buf;
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    report(4, "transcendental vs finite-difference vs shooting on 500 random wells",
           passed == 500 && t.elapsed() < 90.0, t.elapsed(), detail);
}

// ---- criterion 5: trend checks ---------------------------------------------

bool levels_strictly_decreasing(const SweepResult& result, std::string& why) {
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        const SweepRow& prev = result.rows[i - 1];
        const SweepRow& cur = result.rows[i];
        const std::size_t common = std::min(prev.energies.size(), cur.energies.size());
        for (std::size_t n = 0; n < common; ++n)
            if (!(cur.energies[n] < prev.energies[n])) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "level %zu not decreasing at %s = %g",
                              n + 1, to_string(result.spec.parameter).c_str(),
                              cur.value);
                why = buf;
                return false;
            }
    }
    return true;
}

SweepResult sweep_over(const WellConfig& fixed, const char* param, double start,
                       double stop, int steps) {
    SweepSpec spec;
    spec.parameter = parse_sweep_parameter(param);
    spec.fixed = fixed;
    spec.start = start;
    spec.stop = stop;
    spec.steps = steps;
    const SweepResult result = run_sweep(spec);
    for (const SweepRow& row : result.rows)
        remember(config_at(spec, row.value));
    return result;
}

// smallest symmetric inside mass admitting level N, by bisection on the
// level count alone (the solver must make this independent of m1)
double appearance_mass(double m1, double V, double a, int N) {
    auto count_at = [&](double m2) {
        return count_bound_states_symmetric(validate({m1, m2, V, V, a}));
    };
    double lo = 1e-6, hi = 100.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (count_at(mid) >= N ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

void criterion_5() {
    const Timer t;
    bool ok = true;
    std::string why;

    // (i) every level strictly decreasing in m2 and in a
    const WellConfig asym = validate({1.0, 2.0, 1.0, 2.0, 1.0});
    const WellConfig sym = validate({1.0, 2.0, 2.0, 2.0, 1.0});
    ok = ok && levels_strictly_decreasing(sweep_over(asym, "m2", 0.5, 6.0, 56), why);
    ok = ok && levels_strictly_decreasing(sweep_over(sym, "m2", 0.5, 6.0, 56), why);
    ok = ok && levels_strictly_decreasing(sweep_over(asym, "a", 0.3, 3.0, 55), why);

    // (ii) symmetric level-appearance masses do not move with m1
    for (int N = 2; N <= 4 && ok; ++N) {
        const double at1 = appearance_mass(1.0, 2.0, 1.0, N);
        const double at10 = appearance_mass(10.0, 2.0, 1.0, N);
        if (std::abs(at1 - at10) > 1e-8) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "appearance mass for level %d moved by %.2e", N,
                          std::abs(at1 - at10));
            why = buf;
            ok = false;
        }
    }

    // (iii) the m1 = 1 curves meet the constant-mass curves at m2 = 1
    for (const WellConfig& base : {asym, sym}) {
        WellConfig c = base;
        c.m2 = 1.0;
        c = validate(c);
        remember(c);
        const Spectrum varied = energy_levels_asymmetric(c);
        const Spectrum constant = energy_levels_constant_mass(c);
        if (varied.states.size() != constant.states.size()) {
            why = "level count differs at m2 = 1";
            ok = false;
            continue;
        }
        for (std::size_t i = 0; i < varied.states.size(); ++i)
            if (std::abs(varied.states[i].E - constant.states[i].E) > 1e-8) {
                why = "curves do not meet at m2 = 1";
                ok = false;
            }
    }

    report(5, "monotone level trends, m1-independent appearances, m2 = 1 crossings",
           ok, t.elapsed(), ok ? "3 sweeps, 3 appearance masses, 2 crossings" : why);
}

// ---- criterion 6: reduction identities -------------------------------------

// independent root of the asymmetric branch equation, bisected here
// rather than through the spectrum solver
double asym_branch_root(const WellConfig& c, int n) {
    const double k_max = std::sqrt(c.m2 * c.V1);
    const double k2 = bisect(
        [&](double k) { return residual_asymmetric(k, n, c); },
        k_max * 1e-12, k_max * (1.0 - 1e-13));
    return k2 * k2 / c.m2;
}

void criterion_6() {
    const Timer t;
    bool ok = true;
    double worst = 0.0;
    std::string why;

    // equal barriers: the general branch equation vs the symmetric solver
    for (const WellConfig& c :
         {validate({1.0, 2.0, 2.0, 2.0, 1.0}), validate({3.0, 0.7, 1.5, 1.5, 2.5})}) {
        remember(c);
        const Spectrum s = energy_levels_symmetric(c);
        for (const BoundState& st : s.states) {
            const double delta = std::abs(asym_branch_root(c, st.n) - st.E);
            worst = std::max(worst, delta);
            if (delta > 1e-10) { ok = false; why = "equal-barrier reduction"; }
        }
    }

    // equal masses: both solvers vs the textbook constant-mass forms,
    // re-derived locally (tangent forms for the symmetric well)
    {
        const WellConfig c = validate({2.0, 2.0, 1.0, 2.0, 1.0});
        remember(c);
        const Spectrum s = energy_levels_constant_mass(c);
        for (const BoundState& st : s.states) {
            const double m = c.m2, k_max = std::sqrt(m * c.V1);
            const double k = bisect(
                [&](double q) {
                    return 2.0 * q * c.a - st.n * M_PI
                        + std::asin(q / std::sqrt(m * c.V2))
                        + std::asin(q / std::sqrt(m * c.V1));
                },
                k_max * 1e-12, k_max * (1.0 - 1e-13));
            const double delta = std::abs(k * k / m - st.E);
            worst = std::max(worst, delta);
            if (delta > 1e-10) { ok = false; why = "constant-mass step well"; }
        }
    }
    {
        const WellConfig c = validate({2.0, 2.0, 3.0, 3.0, 1.5});
        remember(c);
        const Spectrum s = energy_levels_symmetric(c);
        for (const BoundState& st : s.states) {
            const double m = c.m2;
            auto tangent_form = [&](double q) {
                const double kappa = std::sqrt(m * c.V1 - q * q);
                return st.parity == Parity::Even
                    ? q * std::tan(q * c.a) - kappa
                    : q / std::tan(q * c.a) + kappa;
            };
            // bracket inside this state's own monotone window
            const double lo = (st.n - 1) * M_PI / (2.0 * c.a) + 1e-12;
            const double hi =
                std::min(st.n * M_PI / (2.0 * c.a), std::sqrt(m * c.V1)) - 1e-12;
            const double k = bisect(tangent_form, lo, hi);
            const double delta = std::abs(k * k / m - st.E);
            worst = std::max(worst, delta);
            if (delta > 1e-10) { ok = false; why = "constant-mass tangent form"; }
        }
    }

    char detail[128];
    std::snprintf(detail, sizeof detail, "worst |dE| %.2e%s%s", worst,
                  ok ? "" : "; ", ok ? "" : why.c_str());
    report(6, "equal-barrier and equal-mass reductions agree to 1e-10",
           ok, t.elapsed(), detail);
}

// ---- criterion 7: matching-condition suite ---------------------------------

template <typename F>
double simpson(F&& f, double lo, double hi, int intervals) {
    const double h = (hi - lo) / intervals;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i)
        sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

double quadrature_norm(const PiecewiseWavefunction& wf) {
    const double a = wf.config().a;
    // per-side margins: a shared margin of 40 / min(k1, k3) would make
    // the step on the fast-decaying side far coarser than its decay length
    const double left = 40.0 / wf.state().k1;
    const double right = 40.0 / wf.state().k3;
    auto density = [&](double x) {
        const double p = wf.evaluate(x);
        return p * p;
    };
    const double shift = 1e-13;
    return simpson(density, -(a + left), -a - shift, 8000)
        + simpson(density, -a + shift, a - shift, 8000)
        + simpson(density, a + shift, a + right, 8000);
}

int interior_sign_changes(const PiecewiseWavefunction& wf) {
    const double a = wf.config().a;
    int changes = 0;
    double prev = wf.evaluate(-a + 1e-9);
    for (int i = 1; i < 6000; ++i) {
        const double v = wf.evaluate(-a + 2.0 * a * i / 6000.0);
        if ((prev < 0.0) != (v < 0.0)) ++changes;
        prev = v;
    }
    return changes;
}

void criterion_7() {
    const Timer t;
    int states = 0, bad_residual = 0, bad_norm = 0, bad_nodes = 0, bad_current = 0;
    for (const WellConfig& c : g_matching_configs) {
        const Spectrum s = energy_levels_asymmetric(c);
        for (const BoundState& st : s.states) {
            ++states;
            std::optional<PiecewiseWavefunction> built;
            try {
                built.emplace(PiecewiseWavefunction::build(c, st));
            } catch (const MatchingResidualTooLarge&) {
                ++bad_residual;
                continue;
            }
            const PiecewiseWavefunction& wf = *built;
            if (wf.matching_residual().max() >= 1e-9) ++bad_residual;
            if (std::abs(quadrature_norm(wf) - 1.0) > 1e-8) ++bad_norm;
            if (interior_sign_changes(wf) != st.n - 1) ++bad_nodes;
            const double span = c.a + 4.0 / std::min(st.k1, st.k3);
            for (int i = 0; i < 100; ++i) {
                const double x = -span + 2.0 * span * i / 99.0;
                if (std::abs(wf.current_density(x)) >= 1e-12) {
                    ++bad_current;
                    break;
                }
            }
        }
    }
    char detail[196];
    std::snprintf(detail, sizeof detail,
                  "%d states; residual/norm/node/current failures %d/%d/%d/%d",
                  states, bad_residual, bad_norm, bad_nodes, bad_current);
    report(7, "junction residuals, normalization, node counts, zero current",
           bad_residual + bad_norm + bad_nodes + bad_current == 0 && states > 0,
           t.elapsed(), detail);
}

// ---- criterion 8: threshold limit ------------------------------------------

void criterion_8() {
    const Timer t;
    const double low = first_bound_threshold(1e-12, 2.0, 1.0, 2.0);
    const double high = first_bound_threshold(1e12, 2.0, 1.0, 2.0);
    const double delta = std::abs((low - high) - M_PI / 2.0);
    char detail[96];
    std::snprintf(detail, sizeof detail, "|difference - pi/2| = %.2e", delta);
    report(8, "threshold angle shifts by pi/2 between the outside-mass limits",
           delta <= 1e-5, t.elapsed(), detail);
}

// configs bracketing the critical values checked in criteria 1-3; the
// critical point itself carries a zero-binding marginal state that no
// double-precision closed form can resolve, so the matching suite
// samples 1% to either side of it instead
void remember_critical_configs() {
    for (double m2 : {2.0, 1.0, 0.5})
        for (int n = 1; n <= 6; ++n) {
            const double ac = critical_width(1.0, m2, 1.0, 2.0, n);
            remember(validate({1.0, m2, 1.0, 2.0, ac * 0.99}));
            remember(validate({1.0, m2, 1.0, 2.0, ac * 1.01}));
        }
    for (double m1 : {1.0, 10.0})
        for (int n = 1; n <= 6; ++n) {
            const double mc = critical_inside_mass(m1, 1.0, 2.0, 1.0, n);
            remember(validate({m1, mc * 0.99, 1.0, 2.0, 1.0}));
            remember(validate({m1, mc * 1.01, 1.0, 2.0, 1.0}));
        }
    for (int n = 2; n <= 6; ++n) {
        const double mc = critical_mass_symmetric(2.0, 1.0, n);
        remember(validate({1.0, mc * 0.99, 2.0, 2.0, 1.0}));
        remember(validate({1.0, mc * 1.01, 2.0, 2.0, 1.0}));
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    remember_critical_configs();
    criterion_7();
    criterion_8();
    std::printf("%s: %d criterion(s) failed\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures);
    return g_failures == 0 ? 0 : 1;
}
