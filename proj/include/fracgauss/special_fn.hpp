#pragma once

#include <complex>

namespace fracgauss {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Gamma function (Lanczos, g = 7, nine coefficients) with reflection for Re z < 1/2.
/// Throws Error(kPole) at non-positive integers.
Complex gamma(Complex z);

/// log Gamma(x) for real x > 0.
double log_gamma(double x);

/// psi(z) = Gamma'(z)/Gamma(z). Argument raised to Re z >= 8, then the
/// asymptotic Bernoulli series; reflection for Re z < 1/2.
Complex digamma(Complex z);

/// Dawson's integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt for real x.
/// Maclaurin series below kDawsonSeriesCutoff, Rybicki's exponential sampling above.
double dawson_ref(double x);

inline constexpr double kDawsonSeriesCutoff = 0.2;

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Weideman's rational expansion (N = 40) in the closed upper half plane and
/// w(z) = 2 exp(-z^2) - w(-z) below it. Throws Error(kOverflow) when
/// Re(z^2) < -700 in the lower half plane.
Complex faddeeva(Complex z);

enum class DawsonImpl { reference, rational };

/// g(z) = exp(-z^2) + i (2/sqrt(pi)) F(z); its Taylor series is
/// sum_n i^n z^n / Gamma((n+2)/2).
///
/// The reference route is exactly w(z). The rational route replaces F by the
/// tabulated sinc-fit rational approximation x sum alpha/(1+(2 gamma x)^2).
Complex g_kernel(Complex z, DawsonImpl impl = DawsonImpl::reference);

}  // namespace fracgauss
