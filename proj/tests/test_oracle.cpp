#include <doctest.h>

#include <cmath>
#include <vector>

#include "pdmwell/io.hpp"
#include "pdmwell/model.hpp"
#include "pdmwell/oracle.hpp"
#include "pdmwell/spectrum.hpp"

using namespace pdmwell;

namespace {
const WellConfig kAsym = validate({1.0, 2.0, 1.0, 2.0, 1.0});
const WellConfig kSym = validate({1.0, 1.0, 2.0, 2.0, 1.0});
const WellConfig kSym5 = validate({1.0, 5.0, 2.0, 2.0, 1.0});
} // namespace

TEST_CASE("grid places the junctions exactly on nodes") {
    const Grid g = Grid::build(kAsym, 16000);
    CHECK(g.n_points >= 2000);
    CHECK(g.node(g.n_outside) == doctest::Approx(-kAsym.a).epsilon(1e-14));
    CHECK(g.node(g.n_points - 1 - g.n_outside) == doctest::Approx(kAsym.a).epsilon(1e-14));
    // x = 0 is the central node, required by the shooting match point
    CHECK(std::abs((g.node((g.n_points - 1) / 2)) - (0.0)) <= 1e-12);
    // 40 decay lengths of margin at the E = V1/2 floor
    const double expected_margin = 40.0 / std::sqrt(kAsym.m1 * kAsym.V1 / 2.0);
    CHECK(g.x_max - kAsym.a >= expected_margin);
    CHECK(g.x_max - kAsym.a < expected_margin * 1.01);
    CHECK_THROWS_AS(Grid::build(kAsym, 100), Error);
}

TEST_CASE("finite differences recover the symmetric ground state") {
    const OracleSpectrum s = eigen_fd(kSym, Grid::build(kSym, 4000));
    REQUIRE(s.energies.size() == 1);
    CHECK(std::abs(s.energies[0] - 0.79220433227321) < 1e-3);
}

TEST_CASE("finite differences recover the asymmetric ground state") {
    const OracleSpectrum s = eigen_fd(kAsym, Grid::build(kAsym, 16000));
    REQUIRE(s.energies.size() == 1);
    CHECK(std::abs(s.energies[0] - 0.37063090153371) < 1e-3);
}

TEST_CASE("deep-well limit approaches the hard-box level") {
    // V -> infinity: k2 * 2a -> pi, E -> pi^2 / 4 for m2 = 1, a = 1
    const WellConfig deep = validate({1.0, 1.0, 1e7, 1e7, 1.0});
    const OracleSpectrum s = eigen_fd(deep, Grid::build(deep, 16000), 0.0, 1);
    REQUIRE(s.energies.size() == 1);
    const double box = M_PI * M_PI / 4.0;
    CHECK(std::abs(s.energies[0] - box) / box < 1e-3);
}

TEST_CASE("finite-difference error shrinks at second order") {
    const double exact = 0.37063090153371;
    std::vector<double> errors;
    for (int n : {2000, 4000, 8000, 16000}) {
        const OracleSpectrum s = eigen_fd(kAsym, Grid::build(kAsym, n));
        REQUIRE(s.energies.size() == 1);
        errors.push_back(std::abs(s.energies[0] - exact));
    }
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const double ratio = errors[i] / errors[i + 1];
        CHECK(ratio > 2.5);
        CHECK(ratio < 6.5);
    }
}

TEST_CASE("grid refinement check flags unreachable tolerances") {
    CHECK_THROWS_AS(eigen_fd(kAsym, Grid::build(kAsym, 2000), 1e-15),
                    GridTooCoarse);
    CHECK_NOTHROW(eigen_fd(kAsym, Grid::build(kAsym, 8000), 1e-4));
}

TEST_CASE("shooting mismatch vanishes at converged energies") {
    const Grid g = Grid::build(kSym5, 16000);
    for (const BoundState& st : energy_levels_symmetric(kSym5).states)
        CHECK(std::abs(shoot(kSym5, st.E, g)) < 1e-3);
}

TEST_CASE("shooting mismatch alternates sign between levels") {
    const Grid g = Grid::build(kSym5, 16000);
    const Spectrum s = energy_levels_symmetric(kSym5);
    REQUIRE(s.states.size() == 3);
    // sample between consecutive levels and at the interval edges
    std::vector<double> probes = {s.states[0].E / 2.0};
    for (int i = 0; i + 1 < 3; ++i)
        probes.push_back(0.5 * (s.states[i].E + s.states[i + 1].E));
    probes.push_back(0.5 * (s.states[2].E + kSym5.V1));
    std::vector<double> w;
    for (double e : probes) w.push_back(shoot(kSym5, e, g));
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        CHECK((w[i] < 0.0) != (w[i + 1] < 0.0));
    // no further sign change above the last level
    CHECK((w.back() < 0.0) == (shoot(kSym5, kSym5.V1 * (1.0 - 1e-9), g) < 0.0));
}

TEST_CASE("scan-based shooting finds every level") {
    const Grid g = Grid::build(kSym5, 16000);
    const std::vector<double> roots = shooting_levels_scan(kSym5, g, 400);
    const Spectrum s = energy_levels_symmetric(kSym5);
    REQUIRE(roots.size() == s.states.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        CHECK(std::abs(roots[i] - s.states[i].E) < 1e-3);
}

TEST_CASE("cross-validation passes on the reference configs") {
    const CrossValidationReport r1 = cross_validate(kAsym, 1e-3);
    CHECK(r1.pass);
    CHECK(r1.rows.size() == 1);

    const CrossValidationReport r3 = cross_validate(kSym5, 1e-3);
    CHECK(r3.pass);
    CHECK(r3.rows.size() == 3);
    for (const CrossValidationRow& row : r3.rows)
        CHECK(row.max_delta <= 1e-3);
}

TEST_CASE("cross-validation rejects unreachable tolerances") {
    try {
        cross_validate(kAsym, 1e-15);
        FAIL("expected a mismatch");
    } catch (const ValidationMismatch& e) {
        CHECK_FALSE(e.report().pass);
        CHECK(e.report().rows.size() == 1);
    }
}

TEST_CASE("the count flips across a critical width and both sides validate") {
    const double ac = critical_width(1.0, 2.0, 1.0, 2.0, 2);
    WellConfig below = kAsym, above = kAsym;
    below.a = ac - 1e-3;
    above.a = ac + 1e-3;
    const CrossValidationReport rb = cross_validate(validate(below), 1e-3);
    const CrossValidationReport ra = cross_validate(validate(above), 1e-3);
    CHECK(rb.pass);
    CHECK(ra.pass);
    CHECK(ra.count_trans == rb.count_trans + 1);
}

TEST_CASE("both methods agree on randomized configs") {
    for (const WellConfig& c : random_configs(11, 40)) {
        const CrossValidationReport r = cross_validate(c, 1e-3, 16000);
        CHECK(r.pass);
        const int expected = c.is_symmetric()
            ? count_bound_states_symmetric(c)
            : count_bound_states_asymmetric(c);
        CHECK(r.count_fd == expected);
    }
}
