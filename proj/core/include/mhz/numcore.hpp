#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mhz/errors.hpp"

namespace mhz {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// ---------------------------------------------------------------------------
// Gamma machinery (Lanczos, g = 7, 9 coefficients).
//
// Gamma(z) = sqrt(2 pi) * (z + g - 1/2)^(z - 1/2) * exp(-(z + g - 1/2)) * A_g(z)
// for Re(z) >= 1/2, with A_g the 9-term rational kernel; reflection
// Gamma(z) Gamma(1-z) = pi / sin(pi z) covers the left half plane.  The same
// kernel in log form gives log_gamma without overflow for large |Im(z)|;
// branch offsets in log_gamma cancel under exp(), which is all beta() needs.
// ---------------------------------------------------------------------------

inline constexpr double pole_guard = 1e-12;  // proximity radius for Gamma poles

// True if z is within `guard` of a non-positive integer (a Gamma pole).
bool near_gamma_pole(cplx z, double guard = pole_guard);

// Gamma(z).  Throws pole_error near non-positive integers.  Relative error
// ~1e-13 for moderate arguments; switches to exp(log_gamma) for large |z| or
// |Im z| > 20 to avoid intermediate overflow.
cplx gamma(cplx z);

// log Gamma(z); the imaginary part is NOT guaranteed to be the principal
// branch for Re(z) < 1/2 (reflection may offset it by multiples of 2 pi,
// harmless under exponentiation).  Throws pole_error at poles.
cplx log_gamma(cplx z);

// Beta factor B(z, s) = Gamma(z) Gamma(s-z) / Gamma(s), computed through
// log_gamma so the huge intermediate magnitudes cancel in the exponent.
// Throws pole_error if z or s-z sits at a Gamma pole; if s itself does, the
// reciprocal 1/Gamma(s) is taken as 0 and the result is 0.
cplx beta_factor(cplx z, cplx s);

// digamma(x) for real x > 0 (asymptotic series after upward recurrence);
// used for L-values at s = 1 where the Hurwitz pole terms cancel.
double digamma(double x);

// ---------------------------------------------------------------------------
// Smooth cutoff phi: C-infinity, phi = 1 on [0, plateau_end], phi = 0 on
// [support_end, inf), bridged by the exp-based smooth step
//   S(u) = f(1-u) / (f(1-u) + f(u)),   f(v) = exp(-1/v),
// with u the normalized position inside [plateau_end, support_end].
// Monotone non-increasing, values in [0,1].
// ---------------------------------------------------------------------------
struct smooth_cutoff {
    double plateau_end = 2.0;
    double support_end = 3.0;

    smooth_cutoff() = default;
    smooth_cutoff(double plateau, double support);

    double operator()(double x) const;
    double derivative(double x) const;  // d phi / dx (0 outside the bridge)
};

// Mellin transform  integral_0^inf x^(z-1) phi(x) dx  for Re(z) > 0.
// Adaptive quadrature over [0, support_end], absolute error <= 1e-10.
// Throws domain_error for Re(z) <= 0.
cplx phi_mellin(cplx z, const smooth_cutoff& phi = smooth_cutoff{});

// ---------------------------------------------------------------------------
// Quadrature kernels.
// ---------------------------------------------------------------------------

// Adaptive Simpson on [a,b] for a complex-valued integrand; recursion depth
// capped, throws convergence_error if the tolerance cannot be met.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

// Fixed-order Gauss-Legendre on [a,b] (order 16 or 32 supported).
cplx integrate_gauss(const std::function<cplx(double)>& f, double a, double b,
                     int order = 32);

// Panel-based Gauss-Legendre: splits [a,b] into panels of width <= panel,
// order-32 rule per panel; the estimated error is the difference against the
// order-16 evaluation accumulated panel-wise.
struct panel_result {
    cplx value;
    double err_estimate;
};
panel_result integrate_panels(const std::function<cplx(double)>& f, double a,
                              double b, double panel = 2.0);

}  // namespace mhz
