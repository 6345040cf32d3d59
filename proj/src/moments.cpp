#include "fracgauss/moments.hpp"

#include <cmath>
#include <string>

#include "fracgauss/error.hpp"

namespace fracgauss {
namespace {

void check_count(int count) {
    if (count < 2) {
        throw Error(ErrorCode::kInvalidArgument,
                    "moment count must be at least 2, got " + std::to_string(count));
    }
}

double checked_exp(double log_value) {
    if (log_value > 709.0) {
        throw Error(ErrorCode::kOverflow, "moment magnitude exceeds double range");
    }
    return std::exp(log_value);
}

}  // namespace

void validate(const FracParams& params) {
    if (!std::isfinite(params.a) || !std::isfinite(params.sigma)) {
        throw Error(ErrorCode::kInvalidArgument, "fractional parameters must be finite");
    }
    if (!(params.sigma > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
    }
}

MomentSequence frac_moments(const FracParams& params, int count) {
    validate(params);
    check_count(count);
    if (!(params.a > -1.0)) {
        throw Error(ErrorCode::kDomain, "fractional moments require a > -1");
    }
    const double log_scale = std::log(std::sqrt(2.0) / params.sigma);
    const Complex phase = std::polar(1.0, 0.5 * kPi * params.a);

    MomentSequence seq;
    seq.kind = MomentKind::fractional;
    seq.params = params;
    seq.values.reserve(count);
    for (int n = 0; n < count; ++n) {
        const double log_mag = log_gamma(0.5 * (n + 2)) + log_gamma(0.5 * (params.a + n + 1)) -
                               log_gamma(n + 1.0) + (params.a + n) * log_scale -
                               0.5 * std::log(kPi);
        seq.values.push_back(phase * checked_exp(log_mag));
    }
    return seq;
}

MomentSequence order_deriv_moments(const FracParams& params, int count) {
    MomentSequence seq = frac_moments(params, count);
    seq.kind = MomentKind::order_derivative;
    const double log_scale = std::log(std::sqrt(2.0) / params.sigma);
    for (int n = 0; n < count; ++n) {
        const Complex bracket = log_scale +
                                0.5 * digamma(Complex(0.5 * (params.a + n + 1), 0.0)) +
                                Complex(0.0, 0.5 * kPi);
        seq.values[n] *= bracket;
    }
    return seq;
}

MomentSequence sinc_moments(int count) {
    check_count(count);
    MomentSequence seq;
    seq.kind = MomentKind::sinc_cosinc;
    seq.values.reserve(count);
    for (int n = 0; n < count; ++n) {
        seq.values.emplace_back(std::exp(log_gamma(0.5 * (n + 2)) - log_gamma(n + 2.0)), 0.0);
    }
    return seq;
}

}  // namespace fracgauss
