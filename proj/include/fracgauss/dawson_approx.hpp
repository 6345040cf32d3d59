#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fracgauss/approx.hpp"

namespace fracgauss {

/// Table 2 with its nodes square-rooted, i.e. the gamma_m that satisfy the sinc
/// moment equations. Cached; label "table2".
const ExponentialSum& sinc_table_sum();

/// sum_m alpha_m g(gamma_m x); the real part approximates sin(x)/x and the
/// imaginary part (1 - cos x)/x.
ComplexGrid sinc_cosinc_approx(const ExponentialSum& sum, std::span<const double> x);

/// F~(x) = x sum_m alpha_m / (1 + (2 gamma_m x)^2), real part only.
/// Throws kPole for a denominator below 1e-14 in magnitude and kDomain when the
/// imaginary part exceeds 1e-12 of the term magnitudes (broken conjugate pairs).
std::vector<double> dawson_rational(const ExponentialSum& sum, std::span<const double> x);
double dawson_rational(const ExponentialSum& sum, double x);

/// The same rational function at a complex argument (used by the rational g kernel).
Complex dawson_rational_complex(const ExponentialSum& sum, Complex z);

inline constexpr std::pair<double, double> kEps1Range{-200.0, 200.0};
inline constexpr int kEps1Points = 200000;

/// max |sin(x)/x - sum alpha_m exp(-(gamma_m x)^2)| on a uniform scan. The point
/// count doubles until the maximum moves by less than 1%.
double error_eps1(const ExponentialSum& sum, std::pair<double, double> range = kEps1Range,
                  int points = kEps1Points);

/// eps1 |x| / 2.
double bound_near_zero(double eps1, double x);

/// sum_m |alpha_m| e^{-1/2} / sqrt(2 Re{gamma_m^2}), the bound on max_t |t sum alpha e^{-(gamma t)^2}|.
/// Throws kDomain when some Re{gamma_m^2} <= 0.
double max_inequality_constant(const ExponentialSum& sum);

/// sqrt(pi/x) (1 + max_inequality_constant) / 2 for x > 0.
double bound_far(const ExponentialSum& sum, double x);

/// max over a uniform scan of (0, t_max] of |t sum alpha_m exp(-(gamma_m t)^2)|.
double scan_max_weighted_gaussian_sum(const ExponentialSum& sum, double t_max = 200.0,
                                      int points = kEps1Points);

struct DominationReport {
    double eps1 = 0.0;
    double max_error = 0.0;       // max |F~ - F| over the scan
    double worst_near_ratio = 0.0;  // max |F~ - F| / bound_near_zero on (0, 1]
    double worst_far_ratio = 0.0;   // max |F~ - F| / bound_far on [1, x_max]
    double worst_min_ratio = 0.0;   // max |F~ - F| / min(both bounds) on (0, x_max]
    int points = 0;
    bool near_pass = false;
    bool far_pass = false;
    bool exact_zero = false;  // F~(0) == 0
    bool odd = false;         // F~(-x) == -F~(x) bitwise on the scan
};

/// Compare the rational approximation with dawson_ref on `points` uniform points
/// of (0, x_max] against both error bounds.
DominationReport check_domination(const ExponentialSum& sum, double eps1, double x_max = 200.0,
                                  int points = 20000);

}  // namespace fracgauss
