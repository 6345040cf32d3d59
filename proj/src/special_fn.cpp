#include "fracgauss/special_fn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fracgauss/dawson_approx.hpp"
#include "fracgauss/error.hpp"

namespace fracgauss {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::kInvalidArgument, std::string(who) + ": non-finite argument");
    }
}

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma(z + 1) for Re z >= -1/2, Lanczos form.
Complex lanczos_log_gamma_shifted(Complex z) {
    Complex series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

constexpr int kWeidemanTerms = 40;

struct WeidemanTable {
    double L;
    std::array<double, kWeidemanTerms> coeffs;  // coefficient of Z^(n-1), n = 1..N
};

WeidemanTable make_weideman_table() {
    WeidemanTable table{};
    const int big_m = 2 * kWeidemanTerms;
    table.L = std::sqrt(kWeidemanTerms / std::sqrt(2.0));
    // a_n = (1/2M) sum_{k=-M+1}^{M-1} f(L tan(k pi / 2M)) cos(n k pi / M)
    // with f(t) = exp(-t^2) (L^2 + t^2); the k = -M sample is f(-inf) = 0.
    std::array<double, 2 * 2 * kWeidemanTerms> samples{};
    for (int k = -big_m + 1; k <= big_m - 1; ++k) {
        const double t = table.L * std::tan(k * kPi / (2.0 * big_m));
        samples[k + big_m] = std::exp(-t * t) * (table.L * table.L + t * t);
    }
    for (int n = 1; n <= kWeidemanTerms; ++n) {
        double acc = 0.0;
        for (int k = -big_m + 1; k <= big_m - 1; ++k) {
            acc += samples[k + big_m] * std::cos(n * k * kPi / big_m);
        }
        table.coeffs[n - 1] = acc / (2.0 * big_m);
    }
    return table;
}

Complex faddeeva_upper(Complex z) {
    static const WeidemanTable table = make_weideman_table();
    const Complex iz(-z.imag(), z.real());
    const Complex denom = table.L - iz;
    const Complex big_z = (table.L + iz) / denom;
    Complex p = 0.0;
    for (int n = kWeidemanTerms - 1; n >= 0; --n) {
        p = p * big_z + table.coeffs[n];
    }
    return 2.0 * p / (denom * denom) + (1.0 / kSqrtPi) / denom;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "invalid argument";
        case ErrorCode::kPole: return "pole";
        case ErrorCode::kOverflow: return "overflow";
        case ErrorCode::kRank: return "rank";
        case ErrorCode::kConvergence: return "convergence";
        case ErrorCode::kDegenerate: return "degenerate";
        case ErrorCode::kDomain: return "domain";
        case ErrorCode::kQuadrature: return "quadrature";
        case ErrorCode::kNegativeResult: return "negative result";
        case ErrorCode::kIo: return "io";
    }
    return "unknown";
}

Complex gamma(Complex z) {
    require_finite(z, "gamma");
    if (is_nonpositive_integer(z)) {
        throw Error(ErrorCode::kPole, "gamma: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
    }
    return std::exp(lanczos_log_gamma_shifted(z - 1.0));
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw Error(ErrorCode::kDomain, "log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    return lanczos_log_gamma_shifted(Complex(x - 1.0, 0.0)).real();
}

Complex digamma(Complex z) {
    require_finite(z, "digamma");
    if (is_nonpositive_integer(z)) {
        throw Error(ErrorCode::kPole, "digamma: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    }
    Complex shift = 0.0;
    while (z.real() < 8.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const Complex w = 1.0 / (z * z);
    const Complex tail =
        w * (1.0 / 12 -
             w * (1.0 / 120 -
                  w * (1.0 / 252 -
                       w * (1.0 / 240 -
                            w * (1.0 / 132 -
                                 w * (691.0 / 32760 - w * (1.0 / 12 - w * (3617.0 / 8160))))))));
    return shift + std::log(z) - 0.5 / z - tail;
}

double dawson_ref(double x) {
    require_finite(x, "dawson_ref");
    const double ax = std::fabs(x);
    if (ax < kDawsonSeriesCutoff) {
        // F(x) = sum_n (-1)^n 2^n x^(2n+1) / (2n+1)!!
        const double x2 = x * x;
        double term = x;
        double sum = x;
        for (int n = 1; n < 40; ++n) {
            term *= -2.0 * x2 / (2.0 * n + 1.0);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    // F(x) ~ (1/sqrt(pi)) sum_{k odd} exp(-(x' - k h)^2) / (k + n0),
    // x = x' + n0 h with n0 even; truncation error ~ exp(-(pi / 2h)^2).
    constexpr double h = 0.2;
    constexpr int kHalfWidth = 35;
    const double n0 = 2.0 * std::round(0.5 * ax / h);
    const double xp = ax - n0 * h;
    double sum = 0.0;
    for (int k = -kHalfWidth; k <= kHalfWidth; k += 2) {
        const double d = xp - k * h;
        sum += std::exp(-d * d) / (k + n0);
    }
    return std::copysign(sum / kSqrtPi, x);
}

Complex faddeeva(Complex z) {
    if (z.imag() >= 0.0) {
        return faddeeva_upper(z);
    }
    const Complex z2 = z * z;
    if (z2.real() < -700.0) {
        throw Error(ErrorCode::kOverflow, "faddeeva: exp(-z^2) overflows below the real axis");
    }
    return 2.0 * std::exp(-z2) - faddeeva_upper(-z);
}

Complex g_kernel(Complex z, DawsonImpl impl) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::kInvalidArgument, "g_kernel: non-finite argument");
    }
    if (impl == DawsonImpl::reference) {
        return faddeeva(z);
    }
    const Complex z2 = z * z;
    if (z2.real() < -700.0) {
        throw Error(ErrorCode::kOverflow, "g_kernel: exp(-z^2) overflows");
    }
    const Complex dawson = dawson_rational_complex(sinc_table_sum(), z);
    return std::exp(-z2) + Complex(0.0, 2.0 / kSqrtPi) * dawson;
}

}  // namespace fracgauss
