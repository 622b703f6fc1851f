#ifndef PDMWELL_ORACLE_HPP
#define PDMWELL_ORACLE_HPP

#include <string>
#include <vector>

#include "pdmwell/model.hpp"

// Brute-force eigensolvers for the reduced equation
//   -phi'' + m(x) (V(x) - E) phi = 0
// on a truncated domain: a finite-difference generalized tridiagonal
// solver (Sturm-sequence bisection) and a two-sided shooting method.
// Used to cross-check every transcendental-equation energy.

namespace pdmwell {

/// Uniform grid with the junctions +-a placed exactly on nodes and a
/// margin of 40 decay lengths on each side (decay rate floored at its
/// value for E = V1/2).
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;   // total nodes, junctions and x = 0 included
    double h = 0.0;
    int n_inside = 0;   // nodes strictly between the junctions, +-a excluded
    int n_outside = 0;  // nodes beyond each junction, boundary included

    /// target_points is a lower bound of 2000 and an approximate total.
    /// margin_scale widens the truncation margin; needed for states
    /// within a hair of the threshold, whose decay length exceeds the
    /// default margin.
    static Grid build(const WellConfig& config, int target_points = 16000,
                      double margin_scale = 1.0);

    double node(int i) const { return x_min + i * h; }
};

enum class OracleMethod { FiniteDifference, Shooting };

struct OracleSpectrum {
    std::vector<double> energies; // strictly increasing, all < V1
    Grid grid;
    OracleMethod method = OracleMethod::FiniteDifference;
};

/// Second-order central-difference discretization of the generalized
/// symmetric-definite pencil (-D^2 + diag(mV)) phi = E diag(m) phi with
/// Dirichlet boundaries; all eigenvalues below V1 via Sturm-sequence
/// bisection. Junction nodes carry the cell averages of m V and m.
/// When check_tol > 0 the computation is repeated on a doubled grid and
/// GridTooCoarse is thrown if any energy shifts by more than check_tol.
/// max_levels > 0 truncates the output to the lowest levels (deep wells
/// can hold thousands).
OracleSpectrum eigen_fd(const WellConfig& config, const Grid& grid,
                        double check_tol = 0.0, int max_levels = 0);

/// Integrates phi from both boundaries toward x = 0 with exact
/// exponential initial data (classic fourth-order Runge-Kutta, fixed
/// step) and returns the Wronskian mismatch
///   W(E) = phi_L' phi_R - phi_L phi_R'
/// normalized to O(1); bound-state energies are its roots. The
/// integration renormalizes whenever |phi| exceeds 1e100.
double shoot(const WellConfig& config, double E_trial, const Grid& grid);

/// Roots of W(E) located by bisection inside brackets built from
/// midpoints between the hint energies (plus the interval edges).
std::vector<double> shooting_levels(const WellConfig& config, const Grid& grid,
                                    const std::vector<double>& hint_energies);

/// Roots of W(E) located by a uniform scan of n_scan points on (0, V1).
std::vector<double> shooting_levels_scan(const WellConfig& config,
                                         const Grid& grid, int n_scan);

struct CrossValidationRow {
    int n = 0;
    double E_trans = 0.0;
    double E_fd = 0.0;
    double E_shoot = 0.0;
    double max_delta = 0.0;
};

struct CrossValidationReport {
    WellConfig config;
    int count_trans = 0;
    int count_fd = 0;
    int count_shoot = 0;
    double tol = 0.0;
    bool pass = false;
    std::string message;
    std::vector<CrossValidationRow> rows;
};

class ValidationMismatch : public Error {
public:
    explicit ValidationMismatch(CrossValidationReport report)
        : Error("oracle cross-validation failed: " + report.message),
          report_(std::move(report)) {}
    const CrossValidationReport& report() const { return report_; }
private:
    CrossValidationReport report_;
};

/// Runs the transcendental solver and both oracle methods, asserting
/// count equality and per-level |dE| <= tol. Throws ValidationMismatch
/// (carrying the report) on any disagreement.
CrossValidationReport cross_validate(const WellConfig& config, double tol,
                                     int target_points = 16000);

} // namespace pdmwell

#endif
