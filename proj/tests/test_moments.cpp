#include <doctest.h>

#include <cmath>

#include "fracgauss/error.hpp"
#include "fracgauss/moments.hpp"

using namespace fracgauss;

namespace {

const FracParams kBase{0.5, 1.0 / std::sqrt(2.0)};

bool close(Complex got, Complex want, double rel) {
    return std::abs(got - want) <= rel * std::abs(want);
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

TEST_CASE("fractional moments at a = 1/2, sigma = 1/sqrt2") {
    const MomentSequence h = frac_moments(kBase, 64);
    REQUIRE(h.size() == 64);
    CHECK(h.kind == MomentKind::fractional);
    REQUIRE(h.params.has_value());
    // mpmath, 30 digits
    CHECK(close(h.values[0], {0.69136733903629333, 0.69136733903629333}, 1e-14));
    CHECK(close(h.values[1], {0.90640247705547705, 0.90640247705547705}, 1e-14));
    CHECK(close(h.values[5], {1.2746284833592647, 1.2746284833592647}, 1e-14));
    CHECK(close(h.values[23], {1.8466287138941486, 1.8466287138941486}, 1e-13));
    CHECK(close(h.values[63], {2.3714385386699628, 2.3714385386699628}, 1e-13));
}

TEST_CASE("a = 0 with sigma = 1/sqrt2 gives h_n = 1 exactly in phase") {
    const MomentSequence h = frac_moments({0.0, 1.0 / std::sqrt(2.0)}, 64);
    for (const Complex& v : h.values) {
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("phase of every fractional moment is a pi / 2") {
    for (double a : {-0.5, 0.3, 1.0, 1.75}) {
        const MomentSequence h = frac_moments({a, 0.9}, 20);
        for (const Complex& v : h.values) {
            CHECK(std::arg(v) == doctest::Approx(0.5 * kPi * a).epsilon(1e-14));
        }
    }
}

TEST_CASE("changing sigma rescales h_n by (sigma/sigma')^(a+n)") {
    const MomentSequence h1 = frac_moments({0.7, 0.5}, 30);
    const MomentSequence h2 = frac_moments({0.7, 1.0}, 30);
    for (int n = 0; n < 30; ++n) {
        CHECK(close(h2.values[n], h1.values[n] * std::pow(0.5, 0.7 + n), 1e-13));
    }
}

TEST_CASE("fractional moments are finite far beyond n = 170") {
    const MomentSequence h = frac_moments(kBase, 400);
    for (const Complex& v : h.values) CHECK(std::isfinite(std::abs(v)));
}

TEST_CASE("fractional moment errors") {
    CHECK(code_of([] { frac_moments({-1.0, 1.0}, 8); }) == ErrorCode::kDomain);
    CHECK(code_of([] { frac_moments({0.5, 0.0}, 8); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { frac_moments({NAN, 1.0}, 8); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { frac_moments(kBase, 1); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { frac_moments({0.5, 1e-4}, 200); }) == ErrorCode::kOverflow);
}

TEST_CASE("order-derivative moments") {
    const MomentSequence h = order_deriv_moments(kBase, 16);
    CHECK(h.kind == MomentKind::order_derivative);
    CHECK(close(h.values[0], {-0.98214232835072379, 1.1898522248976193}, 1e-13));
    CHECK(close(h.values[1], {-0.8985855831666183, 1.9489617799464596}, 1e-13));
    CHECK(close(h.values[7], {-0.29730687908667996, 4.0407535569058997}, 1e-13));
}

TEST_CASE("order-derivative bracket at a = 0, sigma = sqrt2, n = 1") {
    // log term vanishes; bracket = psi(1)/2 + i pi/2 and h_1 = 1/2
    const MomentSequence h = order_deriv_moments({0.0, std::sqrt(2.0)}, 4);
    const Complex want = 0.5 * Complex(-0.5 * kEulerGamma, 0.5 * kPi);
    CHECK(close(h.values[1], want, 1e-14));
}

TEST_CASE("order-derivative moments match a central difference in a") {
    const double da = 1e-5;
    const MomentSequence hp = frac_moments({0.5 + da, kBase.sigma}, 24);
    const MomentSequence hm = frac_moments({0.5 - da, kBase.sigma}, 24);
    const MomentSequence d = order_deriv_moments(kBase, 24);
    for (int n = 0; n < 24; ++n) {
        CHECK(close((hp.values[n] - hm.values[n]) / (2.0 * da), d.values[n], 1e-8));
    }
}

TEST_CASE("sinc moments") {
    const MomentSequence h = sinc_moments(48);
    CHECK(h.kind == MomentKind::sinc_cosinc);
    CHECK_FALSE(h.params.has_value());
    CHECK(h.values[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.values[1].real() == doctest::Approx(0.44311346272637901).epsilon(1e-14));
    CHECK(h.values[2].real() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(h.values[10].real() == doctest::Approx(3.0062530062530063e-6).epsilon(1e-13));
    for (const Complex& v : h.values) CHECK(v.imag() == 0.0);
    CHECK(code_of([] { sinc_moments(0); }) == ErrorCode::kInvalidArgument);
}
