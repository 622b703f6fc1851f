#ifndef PDMWELL_WAVEFUNCTION_HPP
#define PDMWELL_WAVEFUNCTION_HPP

#include <complex>
#include <vector>

#include "pdmwell/model.hpp"

// Piecewise closed-form eigenfunctions: assembly from the junction
// equations, analytic normalization, and the matching-condition and
// current-density checks.

namespace pdmwell {

/// |delta(psi/sqrt(m))| and |delta((psi/sqrt(m))')| at the two junctions,
/// computed from the closed forms on each side.
struct MatchingResidual {
    double value_left = 0.0;
    double deriv_left = 0.0;
    double value_right = 0.0;
    double deriv_right = 0.0;

    double max() const;
};

struct TabulatedPoint {
    double x = 0.0;
    double psi = 0.0;
    double phi = 0.0;
};

class PiecewiseWavefunction {
public:
    /// Assembles amplitudes with C = 1, verifies the junction residuals
    /// (throws MatchingResidualTooLarge above 1e-9) and rescales so
    /// that the analytic piecewise integral of |psi|^2 is 1. The state
    /// must solve the transcendental equation for this config.
    static PiecewiseWavefunction build(const WellConfig& config,
                                       const BoundState& state);

    /// psi(x). At exactly x = +-a the inside closed form is used; psi
    /// itself is discontinuous there when m1 != m2.
    double evaluate(double x) const;

    /// psi'(x), closed form, inside convention at x = +-a.
    double derivative(double x) const;

    /// phi(x) = psi(x) / sqrt(m(x)); continuous everywhere.
    double evaluate_phi(double x) const;

    MatchingResidual matching_residual() const;

    /// Probability current j(x); identically zero for these real states.
    double current_density(double x) const;

    std::vector<TabulatedPoint> tabulate(double x_min, double x_max,
                                         int count) const;

    const WellConfig& config() const { return config_; }
    const BoundState& state() const { return state_; }
    double norm_constant() const { return norm_; }
    double amplitude_left() const { return A_; }
    double amplitude_right() const { return B_; }
    double amplitude_inside() const { return C_; }

private:
    PiecewiseWavefunction(const WellConfig& config, const BoundState& state);

    double mass_at(double x) const;

    WellConfig config_;
    BoundState state_;
    double A_ = 0.0;
    double B_ = 0.0;
    double C_ = 0.0;
    double norm_ = 1.0;
};

/// Current density for general complex data at a point:
/// j = -i (psi* psi'/m - psi'* psi/m) = 2 Im(psi* psi') / m.
double current_density(std::complex<double> psi, std::complex<double> dpsi,
                       double mass);

} // namespace pdmwell

#endif
