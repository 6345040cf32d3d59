#pragma once

#include <optional>
#include <vector>

#include "fracgauss/special_fn.hpp"

namespace fracgauss {

/// Fractional order `a` and Gaussian width `sigma` (> 0).
struct FracParams {
    double a = 0.5;
    double sigma = 0.70710678118654752440;
};

void validate(const FracParams& params);

enum class MomentKind { fractional, order_derivative, sinc_cosinc };

struct MomentSequence {
    std::vector<Complex> values;
    MomentKind kind = MomentKind::fractional;
    std::optional<FracParams> params;

    std::size_t size() const noexcept { return values.size(); }
};

inline constexpr int kDefaultMomentCount = 64;

/// h_n = pi^(-1/2) e^(i a pi/2) (sqrt2/sigma)^(a+n) Gamma((n+2)/2) Gamma((a+n+1)/2) / n!
///
/// Gamma ratios are formed in log space so counts well past n = 170 stay finite.
/// Requires a > -1 and count >= 2.
MomentSequence frac_moments(const FracParams& params, int count = kDefaultMomentCount);

/// frac_moments(params)[n] * [log(sqrt2/sigma) + psi((a+n+1)/2)/2 + i pi/2]
MomentSequence order_deriv_moments(const FracParams& params, int count = kDefaultMomentCount);

/// h_n = Gamma((n+2)/2) / (n+1)!  (Taylor moments of sinc(x) + i cosinc(x)).
MomentSequence sinc_moments(int count = kDefaultMomentCount);

}  // namespace fracgauss
