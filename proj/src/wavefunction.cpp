#include "pdmwell/wavefunction.hpp"

#include <algorithm>
#include <cmath>

namespace pdmwell {

namespace {
constexpr double kResidualLimit = 1e-9;
}

double MatchingResidual::max() const {
    return std::max(std::max(value_left, deriv_left),
                    std::max(value_right, deriv_right));
}

PiecewiseWavefunction::PiecewiseWavefunction(const WellConfig& config,
                                             const BoundState& state)
    : config_(config), state_(state) {}

PiecewiseWavefunction PiecewiseWavefunction::build(const WellConfig& config,
                                                   const BoundState& state) {
    PiecewiseWavefunction wf(config, state);
    const double a = config.a;
    const double k1 = state.k1, k2 = state.k2, k3 = state.k3;
    const double theta = state.theta;
    const double ratio = std::sqrt(config.m1 / config.m2);

    wf.C_ = 1.0;
    wf.A_ = wf.C_ * std::sin(-k2 * a + theta) * std::exp(k1 * a) * ratio;
    wf.B_ = wf.C_ * std::sin(k2 * a + theta) * std::exp(k3 * a) * ratio;

    // Exact piecewise integrals of psi^2: exponential tails plus the
    // sinusoidal interior.
    const double tail_left = wf.A_ * wf.A_ * std::exp(-2.0 * k1 * a) / (2.0 * k1);
    const double tail_right = wf.B_ * wf.B_ * std::exp(-2.0 * k3 * a) / (2.0 * k3);
    const double mid = wf.C_ * wf.C_
        * (a - (std::sin(2.0 * (k2 * a + theta))
                - std::sin(2.0 * (theta - k2 * a))) / (4.0 * k2));
    wf.norm_ = 1.0 / std::sqrt(tail_left + mid + tail_right);
    wf.A_ *= wf.norm_;
    wf.B_ *= wf.norm_;
    wf.C_ *= wf.norm_;

    const double residual = wf.matching_residual().max();
    if (!(residual <= kResidualLimit)) throw MatchingResidualTooLarge(residual);
    return wf;
}

double PiecewiseWavefunction::mass_at(double x) const {
    return std::abs(x) <= config_.a ? config_.m2 : config_.m1;
}

double PiecewiseWavefunction::evaluate(double x) const {
    const double a = config_.a;
    if (x < -a) return A_ * std::exp(state_.k1 * x);
    if (x > a) return B_ * std::exp(-state_.k3 * x);
    return C_ * std::sin(state_.k2 * x + state_.theta);
}

double PiecewiseWavefunction::derivative(double x) const {
    const double a = config_.a;
    if (x < -a) return A_ * state_.k1 * std::exp(state_.k1 * x);
    if (x > a) return -B_ * state_.k3 * std::exp(-state_.k3 * x);
    return C_ * state_.k2 * std::cos(state_.k2 * x + state_.theta);
}

double PiecewiseWavefunction::evaluate_phi(double x) const {
    return evaluate(x) / std::sqrt(mass_at(x));
}

MatchingResidual PiecewiseWavefunction::matching_residual() const {
    const double a = config_.a;
    const double s1 = std::sqrt(config_.m1), s2 = std::sqrt(config_.m2);
    const double k1 = state_.k1, k2 = state_.k2, k3 = state_.k3;
    const double theta = state_.theta;

    MatchingResidual r;
    r.value_left = std::abs(A_ * std::exp(-k1 * a) / s1
                            - C_ * std::sin(-k2 * a + theta) / s2);
    r.deriv_left = std::abs(A_ * k1 * std::exp(-k1 * a) / s1
                            - C_ * k2 * std::cos(-k2 * a + theta) / s2);
    r.value_right = std::abs(B_ * std::exp(-k3 * a) / s1
                             - C_ * std::sin(k2 * a + theta) / s2);
    r.deriv_right = std::abs(-B_ * k3 * std::exp(-k3 * a) / s1
                             - C_ * k2 * std::cos(k2 * a + theta) / s2);
    return r;
}

double PiecewiseWavefunction::current_density(double x) const {
    return pdmwell::current_density(evaluate(x), derivative(x), mass_at(x));
}

std::vector<TabulatedPoint> PiecewiseWavefunction::tabulate(double x_min,
                                                            double x_max,
                                                            int count) const {
    std::vector<TabulatedPoint> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    const double step = count > 1 ? (x_max - x_min) / (count - 1) : 0.0;
    for (int i = 0; i < count; ++i) {
        const double x = x_min + i * step;
        out.push_back({x, evaluate(x), evaluate_phi(x)});
    }
    return out;
}

double current_density(std::complex<double> psi, std::complex<double> dpsi,
                       double mass) {
    return 2.0 * std::imag(std::conj(psi) * dpsi) / mass;
}

} // namespace pdmwell
