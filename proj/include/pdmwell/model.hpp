#ifndef PDMWELL_MODEL_HPP
#define PDMWELL_MODEL_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

// Core domain types for square wells with a piecewise-constant
// position-dependent mass. Units are chosen so that hbar^2 = 2, hence
// every momentum obeys k^2 = m * (energy difference).

namespace pdmwell {

inline constexpr double kHbarSquared = 2.0;

namespace detail {
inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}
} // namespace detail

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonPositiveParameter : public Error {
public:
    explicit NonPositiveParameter(const std::string& key)
        : Error("parameter must be positive: " + key), key_(key) {}
    const std::string& key() const { return key_; }
private:
    std::string key_;
};

class BarrierOrder : public Error {
public:
    BarrierOrder() : Error("V2 must not be below V1") {}
    std::string key() const { return "V2"; }
};

class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& key)
        : Error("parameter is not finite: " + key), key_(key) {}
    const std::string& key() const { return key_; }
private:
    std::string key_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class BracketFailure : public Error {
public:
    explicit BracketFailure(const std::string& msg) : Error(msg) {}
};

class MatchingResidualTooLarge : public Error {
public:
    explicit MatchingResidualTooLarge(double r)
        : Error("junction residual too large: " + detail::sci(r)) {}
};

class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(double shift)
        : Error("grid refinement shifted an eigenvalue by " + detail::sci(shift)) {}
};

/// The five physical parameters of the well. The potential is V1 for
/// x < -a, zero for |x| < a and V2 for x > a; the mass is m2 inside and
/// m1 outside. deltaV = V2 - V1 is filled in by validate().
struct WellConfig {
    double m1 = 1.0;
    double m2 = 1.0;
    double V1 = 1.0;
    double V2 = 1.0;
    double a = 1.0;
    double deltaV = 0.0;

    bool is_symmetric() const { return V1 == V2; }
};

/// Checks the model invariants (positivity, finiteness, V2 >= V1) and
/// returns the config with deltaV populated. m1 == m2 is allowed; it is
/// the constant-mass reduction. Idempotent.
WellConfig validate(WellConfig config);

/// Kinetic-operator ordering exponents (alpha, beta, gamma) with
/// alpha + beta + gamma = -1, and the derived combinations eta and nu.
/// Only the default ordering alpha = gamma = -1/2, beta = 0 is ever
/// solved; it is the one for which 1 + nu = 0 and 3/4 + eta/2 = 0, so
/// the transformed equation has no singular junction terms.
struct KineticOrdering {
    double alpha = -0.5;
    double beta = 0.0;
    double gamma = -0.5;

    double eta() const { return alpha * (gamma + 2.0) + gamma * (alpha + 2.0); }
    double nu() const { return alpha + gamma; }
    bool satisfies_constraint() const {
        return std::abs(alpha + beta + gamma + 1.0) < 1e-14;
    }
    bool is_default() const { return alpha == -0.5 && beta == 0.0 && gamma == -0.5; }
};

enum class Parity { Even, Odd, None };

inline const char* to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "-";
    }
}

/// One bound state. The wavefunction is A e^{k1 x} on the left,
/// C sin(k2 x + theta) inside and B e^{-k3 x} on the right. Amplitudes
/// are stored unnormalized with C = 1; the wavefunction module rescales.
struct BoundState {
    int n = 0;          // branch index, 1-based
    double E = 0.0;     // 0 < E < V1
    double k1 = 0.0;    // sqrt(m1 (V1 - E))
    double k2 = 0.0;    // sqrt(m2 E)
    double k3 = 0.0;    // sqrt(m1 (V2 - E))
    double theta = 0.0; // phase of the inside sinusoid, reduced to [0, pi)
    double A = 0.0;
    double B = 0.0;
    double C = 1.0;
    Parity parity = Parity::None;
};

} // namespace pdmwell

#endif
