#pragma once

#include <complex>

namespace ramified::specfun {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

/// Euler Gamma function for complex arguments.
///
/// Lanczos approximation (g = 7, 9 terms) on Re z >= 1/2, reflection formula
/// below that. Relative error stays under 1e-13 for |Im z| <= 40 and
/// 0.1 <= |z| <= 50.
///
/// Throws PoleError when z lies within 1e-12 of a non-positive integer.
Complex gamma(Complex z);

/// Riemann zeta function for complex arguments.
///
/// Uses the accelerated alternating (Dirichlet eta) series for Re z >= 0,
/// the functional equation for Re z < 0, and the Laurent expansion about the
/// pole inside |z - 1| < 0.1. Supported for |Im z| <= 150.
///
/// Throws PoleError within 1e-12 of z = 1 and DomainError when |Im z| > 150.
Complex riemann_zeta(Complex z);

/// Laurent expansion of zeta about its pole,
/// 1/(z-1) + sum_n (-1)^n gamma_n (z-1)^n / n!, with 18 Stieltjes constants.
///
/// Throws DomainError unless 0 < |z - 1| < 0.25.
Complex zeta_near_one(Complex z);

/// zeta(1 + w) * w, regular at w = 0.
Complex zeta_times_distance(Complex w);

/// sin(pi z) with exact reduction of Re z modulo 2.
Complex sin_pi(Complex z);

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

inline double gamma(double x) { return gamma(Complex{x, 0.0}).real(); }
inline double riemann_zeta(double x) { return riemann_zeta(Complex{x, 0.0}).real(); }

}  // namespace ramified::specfun
