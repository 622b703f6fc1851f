#include "pdmwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdmwell/spectrum.hpp"

namespace pdmwell {

namespace {

constexpr double kRenormLimit = 1e100;

struct Coefficients {
    std::vector<double> d;  // diagonal of the standard symmetric form
    std::vector<double> e2; // squared off-diagonal
};

// Interior-node coefficients of the pencil reduced to a standard
// symmetric tridiagonal matrix via the diagonal congruence
// phi = diag(m)^{-1/2} u. Junction nodes carry the trapezoid cell
// averages of q = mV and w = m; sampling the inside value there is
// only first-order accurate.
Coefficients assemble(const WellConfig& c, const Grid& g) {
    const int n = g.n_points - 2;
    const int j_left = g.n_outside;
    const int j_right = g.n_points - 1 - g.n_outside;
    const double inv_h2 = 1.0 / (g.h * g.h);

    std::vector<double> q(n), w(n);
    for (int i = 0; i < n; ++i) {
        const int node = i + 1;
        if (node == j_left) {
            q[i] = 0.5 * c.m1 * c.V1;
            w[i] = 0.5 * (c.m1 + c.m2);
        } else if (node == j_right) {
            q[i] = 0.5 * c.m1 * c.V2;
            w[i] = 0.5 * (c.m1 + c.m2);
        } else if (node < j_left) {
            q[i] = c.m1 * c.V1;
            w[i] = c.m1;
        } else if (node > j_right) {
            q[i] = c.m1 * c.V2;
            w[i] = c.m1;
        } else {
            q[i] = 0.0;
            w[i] = c.m2;
        }
    }

    Coefficients coef;
    coef.d.resize(n);
    coef.e2.resize(n - 1);
    for (int i = 0; i < n; ++i) coef.d[i] = (2.0 * inv_h2 + q[i]) / w[i];
    for (int i = 0; i + 1 < n; ++i)
        coef.e2[i] = inv_h2 * inv_h2 / (w[i] * w[i + 1]);
    return coef;
}

// Number of eigenvalues strictly below lambda (negative pivots of the
// LDL^T factorization of T - lambda I).
int sturm_count(const Coefficients& coef, double lambda) {
    int count = 0;
    double pivot = 1.0;
    const int n = static_cast<int>(coef.d.size());
    for (int i = 0; i < n; ++i) {
        double di = coef.d[i] - lambda;
        if (i > 0) di -= coef.e2[i - 1] / pivot;
        if (std::abs(di) < 1e-300) di = -1e-300;
        if (di < 0.0) ++count;
        pivot = di;
    }
    return count;
}

struct ShotState {
    double phi;
    double dphi;
};

// One fixed step of classic RK4 for phi'' = q phi with constant q.
ShotState rk4_step(ShotState y, double q, double h) {
    const auto f = [q](ShotState s) { return ShotState{s.dphi, q * s.phi}; };
    const ShotState k1 = f(y);
    const ShotState k2 = f({y.phi + 0.5 * h * k1.phi, y.dphi + 0.5 * h * k1.dphi});
    const ShotState k3 = f({y.phi + 0.5 * h * k2.phi, y.dphi + 0.5 * h * k2.dphi});
    const ShotState k4 = f({y.phi + h * k3.phi, y.dphi + h * k3.dphi});
    y.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
    y.dphi += h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi);
    return y;
}

ShotState integrate(ShotState y, double q, double h, int steps) {
    for (int i = 0; i < steps; ++i) {
        y = rk4_step(y, q, h);
        const double mag = std::abs(y.phi);
        if (mag > kRenormLimit) {
            y.phi /= mag;
            y.dphi /= mag;
        }
    }
    return y;
}

// Bisection for a root of W(E) inside [lo, hi]; returns NaN when the
// endpoints have the same sign.
double bisect_energy(const WellConfig& c, const Grid& g, double lo, double hi) {
    double w_lo = shoot(c, lo, g);
    double w_hi = shoot(c, hi, g);
    if (w_lo == 0.0) return lo;
    if (w_hi == 0.0) return hi;
    if ((w_lo < 0.0) == (w_hi < 0.0))
        return std::numeric_limits<double>::quiet_NaN();
    const double tol = 1e-8 * std::max(1.0, c.V1);
    for (int it = 0; it < 80 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double w_mid = shoot(c, mid, g);
        if (w_mid == 0.0) return mid;
        if ((w_mid < 0.0) == (w_lo < 0.0)) {
            lo = mid;
            w_lo = w_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

Grid Grid::build(const WellConfig& c, int target_points, double margin_scale) {
    if (target_points < 2000)
        throw Error("oracle grid requires at least 2000 points");
    const double k_floor = std::sqrt(c.m1 * c.V1 / 2.0);
    const double margin = margin_scale * 40.0 / k_floor;
    const double h0 = (2.0 * c.a + 2.0 * margin) / (target_points - 1);
    const int n_half = std::max(1, static_cast<int>(std::lround(c.a / h0)));

    Grid g;
    g.h = c.a / n_half;
    g.n_outside = static_cast<int>(std::ceil(margin / g.h));
    g.n_inside = 2 * n_half - 1;
    g.n_points = 2 * (n_half + g.n_outside) + 1;
    g.x_min = -(c.a + g.n_outside * g.h);
    g.x_max = c.a + g.n_outside * g.h;
    return g;
}

OracleSpectrum eigen_fd(const WellConfig& c, const Grid& grid,
                        double check_tol, int max_levels) {
    const Coefficients coef = assemble(c, grid);
    int below = sturm_count(coef, c.V1);
    if (max_levels > 0) below = std::min(below, max_levels);

    OracleSpectrum spec;
    spec.grid = grid;
    spec.method = OracleMethod::FiniteDifference;
    const double tol = 1e-12 * std::max(1.0, c.V1);
    for (int j = 1; j <= below; ++j) {
        double lo = 0.0, hi = c.V1;
        for (int it = 0; it < 100 && hi - lo > tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(coef, mid) >= j) hi = mid;
            else lo = mid;
        }
        spec.energies.push_back(0.5 * (lo + hi));
    }

    if (check_tol > 0.0) {
        const Grid fine = Grid::build(c, 2 * grid.n_points);
        const OracleSpectrum refined = eigen_fd(c, fine, 0.0, max_levels);
        if (refined.energies.size() != spec.energies.size())
            throw GridTooCoarse(std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < spec.energies.size(); ++i) {
            const double shift = std::abs(refined.energies[i] - spec.energies[i]);
            if (shift > check_tol) throw GridTooCoarse(shift);
        }
    }
    return spec;
}

double shoot(const WellConfig& c, double E_trial, const Grid& g) {
    const double k1 = std::sqrt(c.m1 * (c.V1 - E_trial));
    const double k3 = std::sqrt(c.m1 * (c.V2 - E_trial));
    const double q_left = c.m1 * (c.V1 - E_trial);
    const double q_right = c.m1 * (c.V2 - E_trial);
    const double q_inside = -c.m2 * E_trial;
    const int n_half = (g.n_inside + 1) / 2;

    ShotState left{1.0, k1};
    left = integrate(left, q_left, g.h, g.n_outside);
    left = integrate(left, q_inside, g.h, n_half);

    ShotState right{1.0, -k3};
    right = integrate(right, q_right, -g.h, g.n_outside);
    right = integrate(right, q_inside, -g.h, n_half);

    // sine of the angle between the (k phi, phi') phase vectors; the
    // naive |.|+|.| normalization is 0/0 whenever phi or phi' vanishes
    // at the match point, which happens for every symmetric-well state
    const double kbar = std::sqrt(std::max(c.m2 * E_trial, 1e-300));
    const double w = left.dphi * right.phi - left.phi * right.dphi;
    const double nl = std::hypot(kbar * left.phi, left.dphi);
    const double nr = std::hypot(kbar * right.phi, right.dphi);
    return kbar * w / (nl * nr + 1e-300);
}

std::vector<double> shooting_levels(const WellConfig& c, const Grid& g,
                                    const std::vector<double>& hints) {
    std::vector<double> bounds;
    bounds.push_back(std::max(1e-12, 1e-9 * c.V1));
    for (std::size_t i = 1; i < hints.size(); ++i)
        bounds.push_back(0.5 * (hints[i - 1] + hints[i]));
    bounds.push_back(c.V1 * (1.0 - 1e-9));

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double root = bisect_energy(c, g, bounds[i], bounds[i + 1]);
        if (std::isfinite(root)) roots.push_back(root);
    }
    return roots;
}

std::vector<double> shooting_levels_scan(const WellConfig& c, const Grid& g,
                                         int n_scan) {
    const double lo = std::max(1e-12, 1e-9 * c.V1);
    const double hi = c.V1 * (1.0 - 1e-9);
    const double step = (hi - lo) / n_scan;

    std::vector<double> roots;
    double e_prev = lo;
    double w_prev = shoot(c, e_prev, g);
    for (int i = 1; i <= n_scan; ++i) {
        const double e = lo + i * step;
        const double w = shoot(c, e, g);
        if ((w_prev < 0.0) != (w < 0.0)) {
            const double root = bisect_energy(c, g, e_prev, e);
            if (std::isfinite(root)) roots.push_back(root);
        }
        e_prev = e;
        w_prev = w;
    }
    return roots;
}

namespace {

// FD energies with one Richardson step (computed at h and 2h) when the
// two resolutions agree on the count; removes the leading h^2 error on
// the coarse wide-margin grids used for near-threshold states.
std::vector<double> fd_energies_richardson(const WellConfig& c,
                                           int target_points,
                                           double margin_scale) {
    const Grid fine = Grid::build(c, target_points, margin_scale);
    const Grid coarse = Grid::build(c, target_points / 2, margin_scale);
    std::vector<double> e_fine = eigen_fd(c, fine).energies;
    const std::vector<double> e_coarse = eigen_fd(c, coarse).energies;
    if (e_coarse.size() == e_fine.size())
        for (std::size_t i = 0; i < e_fine.size(); ++i)
            e_fine[i] = (4.0 * e_fine[i] - e_coarse[i]) / 3.0;
    return e_fine;
}

CrossValidationReport attempt_cross_validation(const WellConfig& c,
                                               const Spectrum& trans,
                                               double tol, int target_points,
                                               double margin_scale,
                                               bool richardson) {
    const Grid grid = Grid::build(c, target_points, margin_scale);
    const std::vector<double> fd = richardson
        ? fd_energies_richardson(c, target_points, margin_scale)
        : eigen_fd(c, grid).energies;
    const std::vector<double> sh = shooting_levels(c, grid, fd);

    CrossValidationReport report;
    report.config = c;
    report.tol = tol;
    report.count_trans = static_cast<int>(trans.states.size());
    report.count_fd = static_cast<int>(fd.size());
    report.count_shoot = static_cast<int>(sh.size());

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const int rows = std::max({report.count_trans, report.count_fd,
                               report.count_shoot});
    double worst = 0.0;
    for (int i = 0; i < rows; ++i) {
        CrossValidationRow row;
        row.n = i + 1;
        row.E_trans = i < report.count_trans ? trans.states[i].E : nan;
        row.E_fd = i < report.count_fd ? fd[i] : nan;
        row.E_shoot = i < report.count_shoot ? sh[i] : nan;
        row.max_delta = std::max(std::abs(row.E_trans - row.E_fd),
                                 std::abs(row.E_trans - row.E_shoot));
        worst = std::max(worst, row.max_delta);
        report.rows.push_back(row);
    }

    if (report.count_trans != report.count_fd
        || report.count_trans != report.count_shoot)
        report.message = "level counts disagree";
    else if (!(worst <= tol) && rows > 0)
        report.message = "energy deviation " + std::to_string(worst)
            + " exceeds tolerance";
    else
        report.pass = true;
    return report;
}

} // namespace

CrossValidationReport cross_validate(const WellConfig& config, double tol,
                                     int target_points) {
    const WellConfig c = validate(config);
    const Spectrum trans = energy_levels_asymmetric(c);

    // A state bound by a hair decays far more slowly than the default
    // margin assumes; the oracle then loses it to the Dirichlet walls.
    // Escalate to wider, denser, Richardson-corrected grids before
    // declaring a mismatch.
    struct Attempt { int points; double margin_scale; bool richardson; };
    const Attempt attempts[] = {
        {target_points, 1.0, false},
        {std::max(target_points, 100000), 20.0, true},
        {std::max(target_points, 100000), 60.0, true},
    };

    CrossValidationReport report;
    for (const Attempt& attempt : attempts) {
        report = attempt_cross_validation(c, trans, tol, attempt.points,
                                          attempt.margin_scale,
                                          attempt.richardson);
        if (report.pass) return report;
    }
    throw ValidationMismatch(report);
}

} // namespace pdmwell
