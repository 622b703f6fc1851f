#include "pdmwell/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace pdmwell {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxBisect = 200;
constexpr double kBracketInset = 1e-13;

// Principal-branch inverse sine with clamping only for pure rounding
// (arguments within 1e-14 of 1).
double asin_checked(double x) {
    if (x > 1.0) {
        if (x <= 1.0 + 1e-14) x = 1.0;
        else throw DomainError("inverse sine argument exceeds 1");
    }
    return std::asin(x);
}

// Argument of the inverse sine associated with barrier height V.
double asin_arg(double k2, double V, const WellConfig& c) {
    const double radicand = c.m1 * V - k2 * k2 * (c.m1 / c.m2 - 1.0);
    if (radicand <= 0.0)
        throw DomainError("inverse sine radicand is not positive");
    return k2 / std::sqrt(radicand);
}

// Phase of the inside sinusoid, reduced modulo pi into [0, pi).
double phase_from_k2(double k2, const WellConfig& c) {
    double theta = k2 * c.a + asin_checked(asin_arg(k2, c.V1, c));
    theta = std::fmod(theta, kPi);
    if (theta < 0.0) theta += kPi;
    return theta;
}

BoundState make_state(int n, double k2, double theta, Parity parity,
                      const WellConfig& c) {
    BoundState s;
    s.n = n;
    s.k2 = k2;
    s.E = k2 * k2 / c.m2;
    s.k1 = std::sqrt(c.m1 * (c.V1 - s.E));
    s.k3 = std::sqrt(c.m1 * (c.V2 - s.E));
    s.theta = theta;
    s.parity = parity;
    const double ratio = std::sqrt(c.m1 / c.m2);
    s.C = 1.0;
    s.A = s.C * std::sin(-k2 * c.a + theta) * std::exp(s.k1 * c.a) * ratio;
    s.B = s.C * std::sin(k2 * c.a + theta) * std::exp(s.k3 * c.a) * ratio;
    return s;
}

// Bisection on a residual that is strictly increasing in k2. The
// bracket must satisfy f(k_lo) < 0; if f(k_hi) <= 0 the root sits
// within the inset of the threshold and k_hi is returned.
template <typename F>
double bisect_root(F&& f, RootBracket br) {
    if (br.f_hi <= 0.0) return br.k_hi;
    double lo = br.k_lo, hi = br.k_hi;
    for (int it = 0; it < kMaxBisect; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket exhausted in double
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

template <typename Residual, typename MakeState>
Spectrum solve_levels(const WellConfig& c, int count,
                      Residual&& residual, MakeState&& make) {
    Spectrum spec;
    spec.config = c;
    spec.predicted_count = count;
    const double k_max = std::sqrt(c.m2 * c.V1);
    const double eps = kBracketInset * k_max;
    for (int n = 1; n <= count; ++n) {
        RootBracket br;
        br.n = n;
        br.k_lo = eps;
        br.k_hi = k_max - eps;
        br.f_lo = residual(br.k_lo, n);
        br.f_hi = residual(br.k_hi, n);
        const double k2 = bisect_root(
            [&](double k) { return residual(k, n); }, br);
        spec.states.push_back(make(n, k2));
    }
    return spec;
}

} // namespace

double residual_asymmetric(double k2, int n, const WellConfig& c) {
    return 2.0 * k2 * c.a - n * kPi
        + asin_checked(asin_arg(k2, c.V2, c))
        + asin_checked(asin_arg(k2, c.V1, c));
}

double residual_symmetric(double k2, int n, const WellConfig& c) {
    const double E = k2 * k2 / c.m2;
    const double arg = k2 / std::sqrt(k2 * k2 + c.m1 * (c.V1 - E));
    return 2.0 * k2 * c.a - n * kPi + 2.0 * asin_checked(arg);
}

int count_bound_states_asymmetric(const WellConfig& c) {
    const double lhs = 2.0 * c.a * std::sqrt(c.m2 * c.V1);
    const double shift = first_bound_threshold(c.m1, c.m2, c.V1, c.V2);
    int n = 0;
    while (lhs > (n + 0.5) * kPi - shift) ++n;
    return n;
}

int count_bound_states_symmetric(const WellConfig& c) {
    const double lhs = 2.0 * c.a * std::sqrt(c.m2 * c.V1);
    int n = 0;
    while (lhs > n * kPi) ++n;
    return n;
}

Spectrum energy_levels_symmetric(const WellConfig& c) {
    return solve_levels(
        c, count_bound_states_symmetric(c),
        [&](double k2, int n) { return residual_symmetric(k2, n, c); },
        [&](int n, double k2) {
            const bool even = (n % 2 == 1);
            return make_state(n, k2, even ? kPi / 2.0 : 0.0,
                              even ? Parity::Even : Parity::Odd, c);
        });
}

Spectrum energy_levels_asymmetric(const WellConfig& c) {
    if (c.is_symmetric()) return energy_levels_symmetric(c);
    return solve_levels(
        c, count_bound_states_asymmetric(c),
        [&](double k2, int n) { return residual_asymmetric(k2, n, c); },
        [&](int n, double k2) {
            return make_state(n, k2, phase_from_k2(k2, c), Parity::None, c);
        });
}

Spectrum energy_levels_constant_mass(const WellConfig& c) {
    return energy_levels_asymmetric(c);
}

double critical_width(double m1, double m2, double V1, double V2, int N) {
    const double k_max = std::sqrt(m2 * V1);
    const double shift = first_bound_threshold(m1, m2, V1, V2);
    return ((N - 0.5) * kPi - shift) / (2.0 * k_max);
}

double critical_mass_symmetric(double V, double a, int N) {
    const double root = (N - 1) * kPi / (2.0 * a);
    return root * root / V;
}

double critical_inside_mass(double m1, double V1, double V2, double a, int N) {
    if (V2 == V1) return critical_mass_symmetric(V1, a, N);

    auto g = [&](double m2) {
        return 2.0 * a * std::sqrt(m2 * V1) - (N - 0.5) * kPi
            + first_bound_threshold(m1, m2, V1, V2);
    };

    double lo = 1e-8, hi = 1.0;
    while (g(hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e12)
            throw BracketFailure("no sign change for critical inside mass");
    }
    if (g(lo) >= 0.0) lo = 0.0; // root below the initial bracket
    for (int it = 0; it < kMaxBisect && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double first_bound_threshold(double m1, double m2, double V1, double V2) {
    const double num = std::sqrt(m2 * V1);
    return std::asin(num / std::sqrt(m2 * V1 + m1 * (V2 - V1)));
}

} // namespace pdmwell
