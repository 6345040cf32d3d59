#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "fracgauss/momentsolve.hpp"

namespace fracgauss {

enum class ApproxKind { frac_derivative, order_derivative };

/// f~(t) = sum_m alpha_m g(gamma_m t) approximating either the fractional derivative
/// f_{a,sigma} of the analytic Gaussian, or its derivative with respect to a.
struct FracApprox {
    FracParams params;
    ExponentialSum sum;
    ApproxKind kind = ApproxKind::frac_derivative;
};

enum class AxisKind { time, frequency };

struct ComplexGrid {
    std::vector<double> axis;
    std::vector<Complex> values;
    AxisKind axis_kind = AxisKind::time;
};

struct ErrorReport {
    double l2_closed_form = 0.0;
    double l2_quadrature = 0.0;
    double max_pointwise = 0.0;
    std::pair<double, double> grid_range{0.0, 0.0};
};

/// Uniform grid of n points on [lo, hi] (n >= 2, lo < hi).
std::vector<double> linspace(double lo, double hi, int n);

/// Solve the fractional (or order-derivative) moment problem and wrap the result.
FracApprox make_approx(const FracParams& params, ApproxKind kind, int count = kDefaultMomentCount,
                       const SolveOptions& options = {});

ComplexGrid eval_approx(const FracApprox& approx, std::span<const double> t,
                        DawsonImpl impl = DawsonImpl::reference);

/// f_{a,sigma}(t) = sqrt(2/pi) int_0^inf e^{-w^2/2} (w/sigma)^a exp(i[w t/sigma + a pi/2]) dw.
/// Gauss-Legendre panels, absolute accuracy about 1e-10 or better. Requires a > -1.
Complex oracle_point(const FracParams& params, double t);
ComplexGrid oracle_eval(const FracParams& params, std::span<const double> t);

/// d/da f_{a,sigma}(t) by the same quadrature with the extra factor log(w/sigma) + i pi/2.
Complex oracle_order_point(const FracParams& params, double t);
ComplexGrid oracle_order_eval(const FracParams& params, std::span<const double> t);

struct SpectrumPair {
    ComplexGrid approx;  // f~^(w) = sum alpha/(gamma sigma sqrt2) exp(-w^2 / (4 sigma^2 gamma^2))
    ComplexGrid exact;   // f^(w)  = e^{-w^2/2} (w/sigma)^a e^{i a pi/2}
};

/// Spectra in the integration variable w of oracle_point, so that
/// f~(t) = sqrt(2/pi) int_0^inf f~^(w) exp(i w t/sigma) dw.
/// Throws Error(kDomain) unless every node has |arg gamma| < pi/4.
SpectrumPair spectrum(const FracApprox& approx, std::span<const double> omega);

/// int |f~ - f|^2 dt in closed form (Parseval on the one-sided spectra).
/// Requires a > -1/2 and |arg gamma_m| < pi/4.
double l2_error_closed_form(const FracApprox& approx);

/// int_{lo}^{hi} |f~ - f|^2 dt by adaptive Gauss-Kronrod; infinite limits allowed.
double l2_error_quadrature(const FracApprox& approx,
                           std::pair<double, double> t_range = {-std::numeric_limits<double>::infinity(),
                                                                std::numeric_limits<double>::infinity()});

ComplexGrid order_deriv_eval(const FracApprox& approx, std::span<const double> t,
                             DawsonImpl impl = DawsonImpl::reference);

/// (f~_{a+da} - f~_{a-da}) / (2 da), each side from its own moment solve.
ComplexGrid finite_difference_order(const FracParams& params, double delta_a,
                                    std::span<const double> t, int count = kDefaultMomentCount,
                                    const SolveOptions& options = {});

/// Closed-form and whole-line quadrature L2 errors plus the max pointwise error on t.
ErrorReport error_report(const FracApprox& approx, std::span<const double> t);

double max_abs_difference(const ComplexGrid& x, const ComplexGrid& y);

}  // namespace fracgauss
