#include "fracgauss/approx.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <string>

#include "fracgauss/error.hpp"
#include "fracgauss/quadrature.hpp"

namespace fracgauss {
namespace {

constexpr int kRuleSize = 16;
constexpr int kGeometricPanels = 60;
constexpr int kMaxUniformPanels = 1 << 14;
constexpr double kPanelConvergence = 1e-11;
// Above this |t/sigma| the oracle integrates along arg(w) = +-pi/6 instead of the real axis.
constexpr double kRotationThreshold = 12.0;
constexpr double kRotationAngle = kPi / 6.0;

const GaussRule& rule16() {
    static const GaussRule rule = gauss_legendre(kRuleSize);
    return rule;
}

// Upper limit of the ray integral where |integrand| = r^a exp(-c r^2/2 - s r) falls
// below ~1e-17 relative to O(1).
double ray_cutoff(double a, double c, double s) {
    if (s == 0.0) {
        // w_max = sqrt(2 (17 ln10 + a ln w_max)), fixed point
        double r = 8.0;
        for (int i = 0; i < 50; ++i) {
            r = std::sqrt(2.0 * std::max(1.0, 17.0 * std::log(10.0) + a * std::log(r)));
        }
        return r;
    }
    auto log_mag = [&](double r) { return a * std::log(r) - 0.5 * c * r * r - s * r; };
    double r = std::min(1.0, 1.0 / s);
    while (log_mag(r) > -41.0 || (a > 0.0 && a / r > c * r + s)) r *= 1.05;
    return r;
}

// int_0^inf e^{-w^2/2} w^a (log w)^k e^{i w x} dw along w = r e^{i theta}, k in {0, 1}.
Complex ray_integral(double a, double x, int log_power, double theta) {
    const Complex dir = std::polar(1.0, theta);
    const Complex dir2 = dir * dir;
    const double radius = ray_cutoff(a, dir2.real(), x * dir.imag());

    auto integrand = [&](double r) -> Complex {
        const Complex w = r * dir;
        const Complex expo = -0.5 * r * r * dir2 + Complex(0.0, x) * w + a * std::log(r) +
                             Complex(0.0, (a + 1.0) * theta);
        Complex value = std::exp(expo);
        if (log_power == 1) value *= Complex(std::log(r), theta);
        return value;
    };

    const double split = std::min(1.0, 0.5 * radius);
    Complex total = 0.0;
    double hi = split;
    for (int j = 0; j < kGeometricPanels; ++j) {
        total += integrate_panels<Complex>(rule16(), integrand, 0.5 * hi, hi, 1);
        hi *= 0.5;
    }
    // [0, eps]: leading behaviour r^a (log r + i theta)^k e^{i (a+1) theta}
    const double eps = hi;
    const double a1 = a + 1.0;
    const double eps_pow = std::pow(eps, a1);
    Complex head = eps_pow / a1;
    if (log_power == 1) {
        head = Complex(eps_pow * (std::log(eps) / a1 - 1.0 / (a1 * a1)), theta * eps_pow / a1);
    }
    total += head * std::polar(1.0, a1 * theta);

    int panels = 8;
    Complex previous = integrate_panels<Complex>(rule16(), integrand, split, radius, panels);
    while (true) {
        panels *= 2;
        const Complex current = integrate_panels<Complex>(rule16(), integrand, split, radius, panels);
        if (std::abs(current - previous) < kPanelConvergence) {
            return total + current;
        }
        if (panels >= kMaxUniformPanels) {
            throw Error(ErrorCode::kQuadrature, "oracle quadrature did not converge");
        }
        previous = current;
    }
}

Complex oracle_impl(const FracParams& params, double t, bool order_derivative) {
    validate(params);
    if (!(params.a > -1.0)) {
        throw Error(ErrorCode::kDomain, "oracle requires a > -1");
    }
    if (!std::isfinite(t)) {
        throw Error(ErrorCode::kInvalidArgument, "oracle: non-finite t");
    }
    const double x = t / params.sigma;
    const double theta = std::fabs(x) > kRotationThreshold ? std::copysign(kRotationAngle, x) : 0.0;
    const Complex prefactor = std::sqrt(2.0 / kPi) * std::pow(params.sigma, -params.a) *
                              std::polar(1.0, 0.5 * kPi * params.a);
    const Complex base = ray_integral(params.a, x, 0, theta);
    if (!order_derivative) return prefactor * base;
    const Complex with_log = ray_integral(params.a, x, 1, theta);
    return prefactor * (with_log + Complex(-std::log(params.sigma), 0.5 * kPi) * base);
}

void check_one_sided(const ExponentialSum& sum, const char* who) {
    for (const Term& term : sum.terms) {
        const Complex g2 = term.gamma * term.gamma;
        if (!(term.gamma.real() > 0.0) || !(g2.real() > 0.0)) {
            throw Error(ErrorCode::kDomain, std::string(who) +
                                                ": every node needs Re{gamma} > 0 and "
                                                "Re{gamma^2} > 0");
        }
    }
}

Complex approx_point(const ExponentialSum& sum, double t, DawsonImpl impl) {
    Complex total = 0.0;
    for (const Term& term : sum.terms) total += term.alpha * g_kernel(term.gamma * t, impl);
    return total;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2 || !(lo < hi)) {
        throw Error(ErrorCode::kInvalidArgument, "grid needs n >= 2 and lo < hi");
    }
    std::vector<double> grid(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid[i] = lo + i * step;
    grid.back() = hi;
    return grid;
}

FracApprox make_approx(const FracParams& params, ApproxKind kind, int count,
                       const SolveOptions& options) {
    const MomentSequence moments = kind == ApproxKind::frac_derivative
                                       ? frac_moments(params, count)
                                       : order_deriv_moments(params, count);
    auto [sum, report] = solve(moments, options);
    return FracApprox{params, std::move(sum), kind};
}

ComplexGrid eval_approx(const FracApprox& approx, std::span<const double> t, DawsonImpl impl) {
    if (approx.sum.terms.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "eval_approx: empty sum");
    }
    ComplexGrid grid;
    grid.axis.assign(t.begin(), t.end());
    grid.values.reserve(t.size());
    for (double ti : t) grid.values.push_back(approx_point(approx.sum, ti, impl));
    return grid;
}

Complex oracle_point(const FracParams& params, double t) { return oracle_impl(params, t, false); }

ComplexGrid oracle_eval(const FracParams& params, std::span<const double> t) {
    ComplexGrid grid;
    grid.axis.assign(t.begin(), t.end());
    for (double ti : t) grid.values.push_back(oracle_point(params, ti));
    return grid;
}

Complex oracle_order_point(const FracParams& params, double t) {
    return oracle_impl(params, t, true);
}

ComplexGrid oracle_order_eval(const FracParams& params, std::span<const double> t) {
    ComplexGrid grid;
    grid.axis.assign(t.begin(), t.end());
    for (double ti : t) grid.values.push_back(oracle_order_point(params, ti));
    return grid;
}

SpectrumPair spectrum(const FracApprox& approx, std::span<const double> omega) {
    validate(approx.params);
    check_one_sided(approx.sum, "spectrum");
    const double a = approx.params.a;
    const double sigma = approx.params.sigma;
    const Complex phase = std::polar(1.0, 0.5 * kPi * a);

    SpectrumPair out;
    out.approx.axis_kind = out.exact.axis_kind = AxisKind::frequency;
    out.approx.axis.assign(omega.begin(), omega.end());
    out.exact.axis = out.approx.axis;
    for (double w : omega) {
        if (!(w >= 0.0)) throw Error(ErrorCode::kDomain, "spectrum: omega must be >= 0");
        Complex value = 0.0;
        for (const Term& term : approx.sum.terms) {
            const Complex g = term.gamma;
            value += term.alpha / (g * sigma * std::sqrt(2.0)) *
                     std::exp(-w * w / (4.0 * sigma * sigma * g * g));
        }
        out.approx.values.push_back(value);
        if (w == 0.0 && a < 0.0) throw Error(ErrorCode::kDomain, "spectrum: (w/sigma)^a at w = 0");
        const double power = (w == 0.0) ? (a == 0.0 ? 1.0 : 0.0) : std::pow(w / sigma, a);
        out.exact.values.push_back(std::exp(-0.5 * w * w) * power * phase);
    }
    return out;
}

double l2_error_closed_form(const FracApprox& approx) {
    validate(approx.params);
    if (approx.kind != ApproxKind::frac_derivative) {
        throw Error(ErrorCode::kDomain, "closed-form L2 error is defined for fractional derivatives");
    }
    const double a = approx.params.a;
    const double sigma = approx.params.sigma;
    if (!(a > -0.5)) throw Error(ErrorCode::kDomain, "closed-form L2 error requires a > -1/2");
    check_one_sided(approx.sum, "l2_error_closed_form");
    // The three pieces are O(1) while their combination can be ~1e-6 with weights
    // of size ~50, so the sums run in extended precision.
    using Real = long double;
    using ComplexL = std::complex<Real>;
    const Real pi = std::acos(Real(-1));
    const Real s = sigma;
    const Real al = a;

    // |f~|^2: Gaussian overlaps of the one-sided spectra alpha/(gamma sqrt(pi)) e^{-u^2/(4 gamma^2)}.
    ComplexL approx_energy = 0.0L;
    for (const Term& p : approx.sum.terms) {
        const ComplexL gp(p.gamma.real(), p.gamma.imag());
        const ComplexL ap(p.alpha.real(), p.alpha.imag());
        for (const Term& q : approx.sum.terms) {
            const ComplexL gq(q.gamma.real(), -q.gamma.imag());
            const ComplexL aq(q.alpha.real(), -q.alpha.imag());
            const ComplexL c = 0.25L * (1.0L / (gp * gp) + 1.0L / (gq * gq));
            if (!(c.real() > 0.0L)) throw Error(ErrorCode::kDomain, "l2: divergent overlap");
            approx_energy += ap * aq / (gp * gq) * std::sqrt(pi / c);
        }
    }
    const Real target_energy = 2.0L * std::pow(s, 1.0L - 2.0L * al) * std::tgamma(al + 0.5L);

    ComplexL cross = 0.0L;
    for (const Term& p : approx.sum.terms) {
        const ComplexL gp(p.gamma.real(), p.gamma.imag());
        const ComplexL ap(p.alpha.real(), p.alpha.imag());
        const ComplexL d = 0.25L / (gp * gp) + 0.5L * s * s;
        if (!(d.real() > 0.0L)) throw Error(ErrorCode::kDomain, "l2: divergent cross term");
        cross += ap / gp * std::pow(d, -0.5L * (al + 1.0L));
    }
    cross *= std::sqrt(2.0L) * s * std::polar(1.0L, -0.5L * pi * al) * std::tgamma(0.5L * (al + 1.0L));

    const double value =
        static_cast<double>(approx_energy.real() + target_energy - 2.0L * cross.real());
    if (value < -1e-10) {
        throw Error(ErrorCode::kNegativeResult,
                    "closed-form L2 error is negative: " + std::to_string(value));
    }
    return std::max(value, 0.0);
}

double l2_error_quadrature(const FracApprox& approx, std::pair<double, double> t_range) {
    validate(approx.params);
    if (!(t_range.first < t_range.second)) {
        throw Error(ErrorCode::kInvalidArgument, "l2_error_quadrature: empty range");
    }
    const bool order = approx.kind == ApproxKind::order_derivative;
    auto integrand = [&](double t) {
        const Complex exact =
            order ? oracle_order_point(approx.params, t) : oracle_point(approx.params, t);
        return std::norm(approx_point(approx.sum, t, DawsonImpl::reference) - exact);
    };
    // The integrand decays only algebraically (like 1/t^2), so infinite pieces use the
    // exp-sinh transform and finite ones adaptive Gauss-Kronrod.
    double total = 0.0;
    double error_total = 0.0;
    auto piece = [&](double lo, double hi) {
        if (!(lo < hi)) return;
        double error_estimate = 0.0;
        double l1 = 0.0;
        if (std::isinf(lo) || std::isinf(hi)) {
            boost::math::quadrature::exp_sinh<double> rule;
            total += rule.integrate(integrand, lo, hi, 1e-12, &error_estimate, &l1);
        } else {
            total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                integrand, lo, hi, 20, 1e-12, &error_estimate, &l1);
        }
        error_total += error_estimate;
    };
    if (t_range.first < 0.0 && t_range.second > 0.0) {
        piece(t_range.first, 0.0);
        piece(0.0, t_range.second);
    } else {
        piece(t_range.first, t_range.second);
    }
    if (!std::isfinite(total) || error_total > 1e-8 * total + 1e-300) {
        throw Error(ErrorCode::kQuadrature,
                    "L2 quadrature did not reach tolerance (estimate " + std::to_string(error_total) +
                        ", value " + std::to_string(total) + ")");
    }
    return total;
}

ComplexGrid order_deriv_eval(const FracApprox& approx, std::span<const double> t,
                             DawsonImpl impl) {
    if (approx.kind != ApproxKind::order_derivative) {
        throw Error(ErrorCode::kInvalidArgument, "order_deriv_eval needs an order-derivative approx");
    }
    return eval_approx(approx, t, impl);
}

ComplexGrid finite_difference_order(const FracParams& params, double delta_a,
                                    std::span<const double> t, int count,
                                    const SolveOptions& options) {
    if (!(delta_a > 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta_a must be positive");
    const FracApprox plus = make_approx({params.a + delta_a, params.sigma},
                                        ApproxKind::frac_derivative, count, options);
    const FracApprox minus = make_approx({params.a - delta_a, params.sigma},
                                         ApproxKind::frac_derivative, count, options);
    ComplexGrid hi = eval_approx(plus, t);
    const ComplexGrid lo = eval_approx(minus, t);
    for (std::size_t i = 0; i < hi.values.size(); ++i) {
        hi.values[i] = (hi.values[i] - lo.values[i]) / (2.0 * delta_a);
    }
    return hi;
}

double max_abs_difference(const ComplexGrid& x, const ComplexGrid& y) {
    if (x.values.size() != y.values.size()) {
        throw Error(ErrorCode::kInvalidArgument, "grids differ in length");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        worst = std::max(worst, std::abs(x.values[i] - y.values[i]));
    }
    return worst;
}

ErrorReport error_report(const FracApprox& approx, std::span<const double> t) {
    if (t.empty()) throw Error(ErrorCode::kInvalidArgument, "error_report: empty grid");
    ErrorReport report;
    report.l2_closed_form = l2_error_closed_form(approx);
    report.l2_quadrature = l2_error_quadrature(approx);
    report.max_pointwise = max_abs_difference(eval_approx(approx, t), oracle_eval(approx.params, t));
    report.grid_range = {t.front(), t.back()};
    return report;
}

}  // namespace fracgauss
