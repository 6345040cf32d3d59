#include <doctest.h>

#include <cmath>

#include "fracgauss/error.hpp"
#include "fracgauss/special_fn.hpp"

using namespace fracgauss;

namespace {

// Reference values from mpmath at 30 digits.
void check_close(Complex got, Complex want, double rel) {
    CHECK(std::abs(got - want) <= rel * std::abs(want));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("gamma matches reference values") {
    check_close(fracgauss::gamma(0.75), 1.2254167024651776, 1e-14);
    check_close(fracgauss::gamma(Complex(2.3, -1.7)), Complex(0.20137700992931731, -0.54181334265829773), 1e-13);
    check_close(fracgauss::gamma(Complex(-2.5, 0.5)), Complex(-0.33387520352243233, -0.20645730796360842), 1e-13);
    check_close(fracgauss::gamma(5.0), 24.0, 1e-14);
    check_close(fracgauss::gamma(0.5), kSqrtPi, 1e-14);
}

TEST_CASE("gamma reflection and duplication") {
    for (double re = -3.3; re < 4.0; re += 0.55) {
        for (double im : {-2.0, 0.0, 0.7}) {
            const Complex z(re, im);
            if (im == 0.0 && std::fabs(re - std::round(re)) < 1e-6) continue;
            check_close(fracgauss::gamma(z) * fracgauss::gamma(1.0 - z), kPi / std::sin(kPi * z), 1e-11);
            check_close(fracgauss::gamma(z) * fracgauss::gamma(z + 0.5),
                        std::pow(2.0, 1.0 - 2.0 * z) * kSqrtPi * fracgauss::gamma(2.0 * z), 1e-11);
        }
    }
}

TEST_CASE("gamma poles and non-finite input") {
    CHECK(code_of([] { fracgauss::gamma(0.0); }) == ErrorCode::kPole);
    CHECK(code_of([] { fracgauss::gamma(-3.0); }) == ErrorCode::kPole);
    CHECK(code_of([] { fracgauss::gamma(Complex(NAN, 0.0)); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("log_gamma") {
    CHECK(log_gamma(50.5) == doctest::Approx(146.51925549072063).epsilon(1e-14));
    CHECK(log_gamma(0.1) == doctest::Approx(2.2527126517342059).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(code_of([] { log_gamma(-1.0); }) == ErrorCode::kDomain);
}

TEST_CASE("digamma") {
    check_close(digamma(1.0), -kEulerGamma, 1e-14);
    check_close(digamma(0.75), -1.0858608797864722, 1e-14);
    check_close(digamma(Complex(1.25, 3.0)), Complex(1.1250353564190296, 1.3236960645549967), 1e-13);
    check_close(digamma(Complex(-0.3, 0.2)), Complex(1.2074414810134602, 2.0732945802801686), 1e-12);
    CHECK(code_of([] { digamma(-2.0); }) == ErrorCode::kPole);
}

TEST_CASE("digamma recurrence psi(z+1) = psi(z) + 1/z") {
    for (double re = -4.2; re < 6.0; re += 0.4) {
        for (double im : {-1.5, 0.0, 0.3, 4.0}) {
            const Complex z(re, im);
            if (im == 0.0 && std::fabs(re - std::round(re)) < 1e-6) continue;
            CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) <= 1e-12);
        }
    }
}

TEST_CASE("dawson_ref reference values and symmetry") {
    const double xs[] = {0.05, 0.19, 0.21, 1.0, 2.5, 5.0, 10.0, 30.0, 100.0};
    const double want[] = {0.049916749940509247, 0.18549268702269875, 0.20393355044308953,
                           0.53807950691276842,  0.22308372216743548, 0.10213407442427684,
                           0.050253847187598528, 0.016675941401059176, 0.0050002500375093783};
    for (int i = 0; i < 9; ++i) {
        CHECK(dawson_ref(xs[i]) == doctest::Approx(want[i]).epsilon(1e-13));
        CHECK(dawson_ref(-xs[i]) == -dawson_ref(xs[i]));
    }
    CHECK(dawson_ref(0.0) == 0.0);
}

TEST_CASE("dawson_ref is continuous across the series cutoff") {
    const double below = dawson_ref(std::nextafter(kDawsonSeriesCutoff, 0.0));
    const double above = dawson_ref(kDawsonSeriesCutoff);
    CHECK(std::fabs(above - below) < 1e-14);
}

TEST_CASE("dawson_ref satisfies F' = 1 - 2xF") {
    const double h = 1e-5;
    for (double x = -10.0; x <= 10.0; x += 0.037) {
        const double fp = (dawson_ref(x + h) - dawson_ref(x - h)) / (2.0 * h);
        CHECK(std::fabs(fp - (1.0 - 2.0 * x * dawson_ref(x))) <= 1e-8);
    }
}

TEST_CASE("dawson_ref tail approaches 1/(2x)") {
    // F(x) ~ sum_k (2k-1)!! / (2^{k+1} x^{2k+1})
    for (double x : {50.0, 200.0, 1e4}) {
        double tail = 0.0;
        double term = 1.0 / (2.0 * x);
        for (int k = 0; k < 6; ++k) {
            tail += term;
            term *= (2.0 * k + 1.0) / (2.0 * x * x);
        }
        CHECK(dawson_ref(x) == doctest::Approx(tail).epsilon(1e-13));
    }
}

TEST_CASE("faddeeva reference values in both half planes") {
    check_close(faddeeva(Complex(1, 1)), Complex(0.30474420525691259, 0.20821893820283163), 1e-13);
    check_close(faddeeva(Complex(3, -0.5)), Complex(-0.037440117100424261, 0.1930284794273171), 1e-12);
    check_close(faddeeva(Complex(-2, 0.1)), Complex(0.040201398161451289, -0.33158268733456309), 1e-13);
    check_close(faddeeva(Complex(0.5, -2)), Complex(-35.63530351200189, 77.380142375345429), 1e-13);
    check_close(faddeeva(Complex(10, 5)), Complex(0.022767948359820291, 0.04516957942734106), 1e-13);
    check_close(faddeeva(Complex(0.01, 0.02)), Complex(0.97773087827669469, 0.010891947677851494), 1e-14);
}

TEST_CASE("faddeeva overflows deep in the lower half plane") {
    CHECK(code_of([] { faddeeva(Complex(0.0, -30.0)); }) == ErrorCode::kOverflow);
}

TEST_CASE("g_kernel on the real axis is exp(-x^2) + i 2/sqrt(pi) F(x)") {
    const Complex g1 = g_kernel(1.0);
    CHECK(g1.real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(g1.imag() == doctest::Approx(2.0 / kSqrtPi * 0.53807950691276842).epsilon(1e-13));
    CHECK(std::abs(g_kernel(0.0) - 1.0) < 1e-15);
    for (double x = -12.0; x <= 12.0; x += 0.73) {
        const Complex g = g_kernel(x);
        CHECK(std::fabs(g.real() - std::exp(-x * x)) <= 1e-14);
        CHECK(std::fabs(g.imag() - 2.0 / kSqrtPi * dawson_ref(x)) <= 1e-13);
    }
}

TEST_CASE("g_kernel Taylor series sum i^n z^n / Gamma((n+2)/2)") {
    for (const Complex z : {Complex(0.3, 0.1), Complex(-0.5, 0.4), Complex(0.2, -0.6)}) {
        Complex series = 0.0;
        Complex power = 1.0;
        for (int n = 0; n < 40; ++n) {
            series += power / fracgauss::gamma(0.5 * (n + 2));
            power *= Complex(0.0, 1.0) * z;
        }
        check_close(g_kernel(z), series, 1e-13);
    }
}

TEST_CASE("rational g_kernel tracks the reference on the real axis") {
    for (double x = -3.0; x <= 3.0; x += 0.25) {
        const Complex diff = g_kernel(x, DawsonImpl::rational) - g_kernel(x);
        CHECK(std::fabs(diff.real()) < 1e-15);
        CHECK(std::fabs(diff.imag()) < 1e-3);
    }
}

TEST_CASE("error codes have names") {
    CHECK(std::string(to_string(ErrorCode::kRank)) == "rank");
    CHECK(std::string(to_string(ErrorCode::kNegativeResult)).size() > 0);
}
