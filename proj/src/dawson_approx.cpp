#include "fracgauss/dawson_approx.hpp"

#include <algorithm>
#include <cmath>

#include "fracgauss/error.hpp"

namespace fracgauss {
namespace {

constexpr double kPoleThreshold = 1e-14;
constexpr double kImagTolerance = 1e-12;
constexpr int kMaxRefinements = 6;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

Complex gaussian_sum(const ExponentialSum& sum, double x) {
    Complex total = 0.0;
    for (const Term& term : sum.terms) {
        const Complex z = term.gamma * x;
        total += term.alpha * std::exp(-z * z);
    }
    return total;
}

double scan_eps1(const ExponentialSum& sum, std::pair<double, double> range, int points) {
    const double step = (range.second - range.first) / (points - 1);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = range.first + i * step;
        worst = std::max(worst, std::fabs(sinc(x) - gaussian_sum(sum, x).real()));
    }
    return worst;
}

}  // namespace

const ExponentialSum& sinc_table_sum() {
    static const ExponentialSum sum = resolve_squared_nodes(load_table(Table::table2));
    return sum;
}

ComplexGrid sinc_cosinc_approx(const ExponentialSum& sum, std::span<const double> x) {
    ComplexGrid grid;
    grid.axis.assign(x.begin(), x.end());
    grid.values.reserve(x.size());
    for (double xi : x) {
        if (!std::isfinite(xi)) throw Error(ErrorCode::kInvalidArgument, "sinc_cosinc_approx: non-finite x");
        Complex total = 0.0;
        for (const Term& term : sum.terms) total += term.alpha * g_kernel(term.gamma * xi);
        grid.values.push_back(total);
    }
    return grid;
}

Complex dawson_rational_complex(const ExponentialSum& sum, Complex z) {
    Complex total = 0.0;
    for (const Term& term : sum.terms) {
        const Complex two_gz = 2.0 * term.gamma * z;
        const Complex den = 1.0 + two_gz * two_gz;
        if (std::abs(den) < kPoleThreshold) {
            throw Error(ErrorCode::kPole, "rational Dawson approximation hits a pole");
        }
        total += term.alpha / den;
    }
    return z * total;
}

double dawson_rational(const ExponentialSum& sum, double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidArgument, "dawson_rational: non-finite x");
    Complex total = 0.0;
    double scale = 0.0;
    for (const Term& term : sum.terms) {
        const Complex two_gx = 2.0 * term.gamma * x;
        const Complex den = 1.0 + two_gx * two_gx;
        if (std::abs(den) < kPoleThreshold) {
            throw Error(ErrorCode::kPole, "rational Dawson approximation hits a pole");
        }
        const Complex part = term.alpha / den;
        total += part;
        scale += std::abs(part);
    }
    if (std::fabs(total.imag()) > kImagTolerance * scale) {
        throw Error(ErrorCode::kDomain,
                    "rational Dawson approximation has a non-negligible imaginary part; "
                    "nodes are not conjugate-closed");
    }
    return x * total.real();
}

std::vector<double> dawson_rational(const ExponentialSum& sum, std::span<const double> x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (double xi : x) out.push_back(dawson_rational(sum, xi));
    return out;
}

double error_eps1(const ExponentialSum& sum, std::pair<double, double> range, int points) {
    if (points < 2 || !(range.first < range.second)) {
        throw Error(ErrorCode::kInvalidArgument, "error_eps1: need points >= 2 and lo < hi");
    }
    double current = scan_eps1(sum, range, points);
    for (int k = 0; k < kMaxRefinements; ++k) {
        points = 2 * points - 1;  // keeps the previous grid as a subset
        const double refined = scan_eps1(sum, range, points);
        const bool settled = std::fabs(refined - current) <= 0.01 * refined;
        current = refined;
        if (settled) break;
    }
    return current;
}

double bound_near_zero(double eps1, double x) {
    if (!(eps1 >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "bound_near_zero: eps1 must be >= 0");
    return 0.5 * eps1 * std::fabs(x);
}

double max_inequality_constant(const ExponentialSum& sum) {
    double total = 0.0;
    for (const Term& term : sum.terms) {
        const double re_g2 = (term.gamma * term.gamma).real();
        if (!(re_g2 > 0.0)) {
            throw Error(ErrorCode::kDomain, "max-inequality constant needs Re{gamma^2} > 0");
        }
        total += std::abs(term.alpha) * std::exp(-0.5) / std::sqrt(2.0 * re_g2);
    }
    return total;
}

double bound_far(const ExponentialSum& sum, double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::kDomain, "bound_far: x must be positive");
    return 0.5 * std::sqrt(kPi / x) * (1.0 + max_inequality_constant(sum));
}

double scan_max_weighted_gaussian_sum(const ExponentialSum& sum, double t_max, int points) {
    if (points < 1 || !(t_max > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "scan: need points >= 1 and t_max > 0");
    }
    double worst = 0.0;
    for (int i = 1; i <= points; ++i) {
        const double t = t_max * i / points;
        worst = std::max(worst, std::abs(t * gaussian_sum(sum, t)));
    }
    return worst;
}

DominationReport check_domination(const ExponentialSum& sum, double eps1, double x_max,
                                  int points) {
    if (points < 1 || !(x_max > 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "check_domination: need points >= 1 and x_max > 1");
    }
    DominationReport report;
    report.eps1 = eps1;
    report.points = points;
    report.exact_zero = dawson_rational(sum, 0.0) == 0.0;
    report.odd = true;
    for (int i = 1; i <= points; ++i) {
        const double x = x_max * i / points;
        const double approx = dawson_rational(sum, x);
        if (dawson_rational(sum, -x) != -approx) report.odd = false;
        const double err = std::fabs(approx - dawson_ref(x));
        report.max_error = std::max(report.max_error, err);
        const double near = bound_near_zero(eps1, x);
        const double far = bound_far(sum, x);
        if (x <= 1.0) report.worst_near_ratio = std::max(report.worst_near_ratio, err / near);
        if (x >= 1.0) report.worst_far_ratio = std::max(report.worst_far_ratio, err / far);
        report.worst_min_ratio = std::max(report.worst_min_ratio, err / std::min(near, far));
    }
    // Make sure (0, 1] is sampled even when the grid is coarse there.
    for (int i = 1; i <= 1000; ++i) {
        const double x = i / 1000.0;
        const double err = std::fabs(dawson_rational(sum, x) - dawson_ref(x));
        report.worst_near_ratio = std::max(report.worst_near_ratio, err / bound_near_zero(eps1, x));
    }
    report.near_pass = report.worst_near_ratio <= 1.0;
    report.far_pass = report.worst_far_ratio <= 1.0;
    return report;
}

}  // namespace fracgauss
