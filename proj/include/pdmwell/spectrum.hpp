#ifndef PDMWELL_SPECTRUM_HPP
#define PDMWELL_SPECTRUM_HPP

#include <vector>

#include "pdmwell/model.hpp"

// Bound-state energies from the transcendental equations, bound-state
// counting inequalities, and closed-form / bisected critical parameter
// values, for asymmetric, symmetric and constant-mass wells.

namespace pdmwell {

struct Spectrum {
    WellConfig config;
    std::vector<BoundState> states;
    int predicted_count = 0;
};

struct RootBracket {
    int n = 0;
    double k_lo = 0.0;
    double k_hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

/// Residual of the asymmetric transcendental equation for branch n,
///   2 k2 a - n pi + asin(k2 / sqrt(m1 V2 - k2^2 (m1/m2 - 1)))
///              + asin(k2 / sqrt(m1 V1 - k2^2 (m1/m2 - 1))),
/// strictly increasing in k2 on (0, sqrt(m2 V1)). Inverse sines are on
/// the principal branch [0, pi/2]. Throws DomainError if an argument
/// exceeds 1 beyond rounding (1e-14 slack).
double residual_asymmetric(double k2, int n, const WellConfig& config);

/// Symmetric-well residual, 2 k2 a - n pi + 2 asin(k2 / sqrt(k2^2 + m1 (V - E)))
/// with E = k2^2 / m2. Equal to residual_asymmetric when V1 = V2.
double residual_symmetric(double k2, int n, const WellConfig& config);

/// Largest n satisfying the asymmetric counting inequality
///   2 a sqrt(m2 V1) > (n - 1/2) pi - asin(sqrt(m2 V1) / sqrt(m2 V1 + m1 dV)).
/// Returns 0 when even n = 1 fails.
int count_bound_states_asymmetric(const WellConfig& config);

/// Largest n with 2 a sqrt(m2 V) > (n - 1) pi; always >= 1.
int count_bound_states_symmetric(const WellConfig& config);

/// All bound states of the asymmetric well, one bisected root per
/// admitted branch. Dispatches to the symmetric solver when V1 = V2 so
/// callers get parity tags. Empty spectrum when no branch is admitted.
Spectrum energy_levels_asymmetric(const WellConfig& config);

/// All bound states of the symmetric well (V1 = V2). Branch n odd gives
/// an even state (theta = pi/2), n even an odd state (theta = 0).
Spectrum energy_levels_symmetric(const WellConfig& config);

/// Constant-mass reduction (m1 = m2); thin dispatch used for
/// equivalence testing.
Spectrum energy_levels_constant_mass(const WellConfig& config);

/// Critical half-width where the N-th bound state appears, closed form:
///   a = [(N - 1/2) pi - asin(sqrt(m2 V1) / sqrt(m2 V1 + m1 dV))] / (2 sqrt(m2 V1)).
double critical_width(double m1, double m2, double V1, double V2, int N);

/// Inside mass where the N-th bound state appears, solved by bracketed
/// bisection; the bracket [1e-8, m_hi] is expanded geometrically.
double critical_inside_mass(double m1, double V1, double V2, double a, int N);

/// Symmetric-well critical inside mass, closed form (N-1)^2 pi^2 / (4 a^2 V).
double critical_mass_symmetric(double V, double a, int N);

/// f(m1) = asin(sqrt(m2 V1) / sqrt(m2 V1 + m1 dV)). A first bound state
/// exists at half-width a iff f(m1) > pi/2 - 2 a sqrt(m2 V1). The limits
/// m1 -> 0 and m1 -> infinity differ by exactly pi/2.
double first_bound_threshold(double m1, double m2, double V1, double V2);

} // namespace pdmwell

#endif
