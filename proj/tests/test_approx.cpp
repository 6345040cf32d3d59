#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracgauss/approx.hpp"
#include "fracgauss/error.hpp"
#include "fracgauss/quadrature.hpp"

using namespace fracgauss;

namespace {

const double kSigma = 1.0 / std::sqrt(2.0);

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::kInvalidArgument;
}

bool close(Complex got, Complex want, double abs_tol) { return std::abs(got - want) <= abs_tol; }

FracApprox table1_approx() {
    return {{0.5, kSigma}, load_table(Table::table1), ApproxKind::frac_derivative};
}

}  // namespace

TEST_CASE("linspace") {
    const auto g = linspace(-1.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == doctest::Approx(0.0));
    CHECK(code_of([] { linspace(0.0, 1.0, 1); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { linspace(1.0, 1.0, 4); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("oracle against high-precision values") {
    // mpmath, closed form through 1F1
    CHECK(close(oracle_point({1.5, kSigma}, 0.5), {-1.2640258765629666, -0.28134847353115777}, 1e-12));
    CHECK(close(oracle_point({1.5, kSigma}, 3.0), {0.068182503928025523, -0.0017763260129412279}, 1e-12));
    CHECK(close(oracle_point({1.5, kSigma}, 50.0), {4.2463575991852152e-05, 0.0}, 1e-12));
    CHECK(close(oracle_point({0.5, kSigma}, -2.0), {0.037151362331239765, -0.24905064299236304}, 1e-12));
    CHECK(close(oracle_point({0.25, kSigma}, 20.0), {-0.0085646516800836677, 0.0085646516800836677}, 1e-12));
}

TEST_CASE("oracle at integer orders") {
    // real parts are the ordinary t-derivatives of exp(-t^2 / 2 sigma^2)
    for (double t = -5.0; t <= 5.0; t += 0.35) {
        const double x = t / kSigma;
        const Complex f0 = oracle_point({0.0, kSigma}, t);
        CHECK(f0.real() == doctest::Approx(std::exp(-0.5 * x * x)).epsilon(1e-10));
        const Complex f1 = oracle_point({1.0, kSigma}, t);
        CHECK(std::fabs(f1.real() + x / kSigma * std::exp(-0.5 * x * x)) <= 1e-10);
        const Complex f2 = oracle_point({2.0, kSigma}, t);
        CHECK(std::fabs(f2.real() - (x * x - 1.0) * std::exp(-0.5 * x * x) / (kSigma * kSigma)) <= 1e-10);
    }
}

TEST_CASE("oracle is continuous across the contour-rotation threshold") {
    for (double a : {0.5, 1.5}) {
        const double t = 12.0 * kSigma;
        const Complex lo = oracle_point({a, kSigma}, std::nextafter(t, 0.0));
        const Complex hi = oracle_point({a, kSigma}, std::nextafter(t, 100.0));
        CHECK(std::abs(hi - lo) < 1e-12);
    }
}

TEST_CASE("oracle domain") {
    CHECK(code_of([] { oracle_point({-1.0, 1.0}, 0.0); }) == ErrorCode::kDomain);
    CHECK(code_of([] { oracle_point({0.5, 1.0}, NAN); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("order-derivative oracle") {
    CHECK(close(oracle_order_point({0.5, kSigma}, 1.0), {-1.2409322259023712, -0.7861904625342262}, 1e-10));
    CHECK(close(oracle_order_point({1.0, kSigma}, -4.0), {1.8582230785336029e-06, 0.03411688114276442}, 1e-10));
    CHECK(close(oracle_order_point({0.5, kSigma}, 30.0), {0.010245775116156828, -0.009569541748291473}, 1e-10));
}

TEST_CASE("a = 0 approximation is the Gaussian itself") {
    const FracApprox ap = make_approx({0.0, kSigma}, ApproxKind::frac_derivative);
    CHECK(ap.sum.size() == 1);
    const auto t = linspace(-6.0, 6.0, 241);
    CHECK(max_abs_difference(eval_approx(ap, t), oracle_eval(ap.params, t)) <= 1e-10);
    CHECK(l2_error_closed_form(ap) <= 1e-12);
}

TEST_CASE("tight tolerance reaches 1e-5 pointwise on [-6, 6]") {
    const FracApprox ap = make_approx({0.5, kSigma}, ApproxKind::frac_derivative, 64, {1e-13, 16});
    CHECK(ap.sum.size() >= 12);
    const auto t = linspace(-6.0, 6.0, 481);
    CHECK(max_abs_difference(eval_approx(ap, t), oracle_eval(ap.params, t)) <= 1e-5);
}

TEST_CASE("eval_approx rejects an empty sum") {
    FracApprox ap = table1_approx();
    ap.sum.terms.clear();
    const std::vector<double> t{0.0};
    CHECK(code_of([&] { eval_approx(ap, t); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("spectrum at a = 0 coincides with the exact one") {
    const FracApprox ap = make_approx({0.0, kSigma}, ApproxKind::frac_derivative);
    const auto w = linspace(0.0, 8.0, 81);
    const SpectrumPair s = spectrum(ap, w);
    CHECK(max_abs_difference(s.approx, s.exact) <= 1e-12);
    CHECK(s.approx.axis_kind == AxisKind::frequency);
}

TEST_CASE("inverting the approximate spectrum recovers the time samples") {
    const FracApprox ap = table1_approx();
    const GaussRule rule = gauss_legendre(20);  // the smallest node gives a spectral width near 0.03
    for (double t : {-2.0, 0.0, 0.7, 3.0}) {
        const Complex back = integrate_panels<Complex>(
            rule,
            [&](double w) {
                const std::vector<double> one{w};
                const Complex fw = spectrum(ap, one).approx.values[0];
                return fw * std::exp(Complex(0.0, w * t / kSigma));
            },
            0.0, 40.0, 4000);
        const std::vector<double> one{t};
        CHECK(std::abs(std::sqrt(2.0 / kPi) * back - eval_approx(ap, one).values[0]) <= 1e-10);
    }
}

TEST_CASE("spectrum domain") {
    const FracApprox ap = table1_approx();
    const std::vector<double> neg{-1.0};
    CHECK(code_of([&] { spectrum(ap, neg); }) == ErrorCode::kDomain);
    FracApprox bad = ap;
    bad.sum.terms[0].gamma = std::polar(1.0, 0.3 * kPi);
    const std::vector<double> w{1.0};
    CHECK(code_of([&] { spectrum(bad, w); }) == ErrorCode::kDomain);
}

TEST_CASE("closed-form L2 matches whole-line quadrature") {
    const FracApprox t1 = table1_approx();
    const double cf = l2_error_closed_form(t1);
    const double q = l2_error_quadrature(t1);
    CHECK(std::fabs(cf - q) <= 1e-6 * q);

    for (double a : {0.25, 1.0}) {
        const FracApprox ap = make_approx({a, kSigma}, ApproxKind::frac_derivative);
        const double c = l2_error_closed_form(ap);
        const double qq = l2_error_quadrature(ap);
        CHECK(std::fabs(c - qq) <= 1e-6 * qq);
    }
}

TEST_CASE("finite-range quadrature is bounded by the whole line") {
    const FracApprox t1 = table1_approx();
    const double part = l2_error_quadrature(t1, {-2.0, 2.0});
    CHECK(part > 0.0);
    CHECK(part <= l2_error_quadrature(t1));
    CHECK(code_of([&] { l2_error_quadrature(t1, {1.0, 1.0}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("closed-form L2 domain") {
    FracApprox ap = table1_approx();
    ap.params.a = -0.5;
    CHECK(code_of([&] { l2_error_closed_form(ap); }) == ErrorCode::kDomain);
    FracApprox od = make_approx({0.5, kSigma}, ApproxKind::order_derivative);
    CHECK(code_of([&] { l2_error_closed_form(od); }) == ErrorCode::kDomain);
}

TEST_CASE("order-derivative approximation") {
    const FracApprox od = make_approx({0.5, kSigma}, ApproxKind::order_derivative);
    CHECK(od.kind == ApproxKind::order_derivative);
    const auto t = linspace(-6.0, 6.0, 121);
    CHECK(max_abs_difference(order_deriv_eval(od, t), oracle_order_eval(od.params, t)) <= 1e-3);
    CHECK(code_of([&] { order_deriv_eval(table1_approx(), t); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("finite difference in a tracks the analytic order derivative") {
    const FracApprox od = make_approx({0.5, kSigma}, ApproxKind::order_derivative);
    const auto t = linspace(-4.0, 4.0, 81);
    const ComplexGrid analytic = order_deriv_eval(od, t);
    const double g1 = max_abs_difference(finite_difference_order(od.params, 0.08, t), analytic);
    const double g2 = max_abs_difference(finite_difference_order(od.params, 0.04, t), analytic);
    CHECK(g2 < g1);
    CHECK(g1 / g2 == doctest::Approx(4.0).epsilon(0.2));
    CHECK(code_of([&] { finite_difference_order(od.params, 0.0, t); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("error report") {
    const FracApprox t1 = table1_approx();
    const auto t = linspace(-6.0, 6.0, 121);
    const ErrorReport r = error_report(t1, t);
    CHECK(r.grid_range.first == -6.0);
    CHECK(r.grid_range.second == 6.0);
    CHECK(r.max_pointwise > 0.0);
    CHECK(std::fabs(r.l2_closed_form - r.l2_quadrature) <= 1e-6 * r.l2_quadrature);
    const std::vector<double> none;
    CHECK(code_of([&] { error_report(t1, none); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("max_abs_difference needs equal lengths") {
    ComplexGrid x{{0.0, 1.0}, {1.0, 2.0}};
    ComplexGrid y{{0.0}, {1.0}};
    CHECK(code_of([&] { max_abs_difference(x, y); }) == ErrorCode::kInvalidArgument);
    y = x;
    y.values[1] += Complex(0.0, 0.5);
    CHECK(max_abs_difference(x, y) == 0.5);
}

TEST_CASE("a = 0 is exact for several widths") {
    for (double sigma : {0.5, kSigma, 1.0, 2.0}) {
        const FracApprox ap = make_approx({0.0, sigma}, ApproxKind::frac_derivative);
        REQUIRE(ap.sum.size() == 1);
        CHECK(std::abs(ap.sum.terms[0].gamma - 1.0 / (sigma * std::sqrt(2.0))) <= 1e-10);
        const auto t = linspace(-6.0, 6.0, 97);
        CHECK(max_abs_difference(eval_approx(ap, t), oracle_eval(ap.params, t)) <= 1e-10);
    }
}

TEST_CASE("solved sums at integer orders reproduce the Gaussian derivatives") {
    const auto t = linspace(-6.0, 6.0, 121);
    const FracApprox a1 = make_approx({1.0, kSigma}, ApproxKind::frac_derivative);
    const FracApprox a2 = make_approx({2.0, kSigma}, ApproxKind::frac_derivative);
    const ComplexGrid v1 = eval_approx(a1, t);
    const ComplexGrid v2 = eval_approx(a2, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = t[i] / kSigma;
        const double g = std::exp(-0.5 * x * x);
        CHECK(std::fabs(v1.values[i].real() + x / kSigma * g) <= 1e-3);
        CHECK(std::fabs(v2.values[i].real() - (x * x - 1.0) / (kSigma * kSigma) * g) <= 1e-3);
    }
}

TEST_CASE("central difference of the oracle in a is second order") {
    const double t = 0.8;
    const Complex exact = oracle_order_point({0.5, kSigma}, t);
    auto fd = [&](double da) {
        return (oracle_point({0.5 + da, kSigma}, t) - oracle_point({0.5 - da, kSigma}, t)) / (2.0 * da);
    };
    const double e1 = std::abs(fd(0.02) - exact);
    const double e2 = std::abs(fd(0.01) - exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("finite difference at t = 0 matches the zeroth order-derivative moment") {
    const std::vector<double> zero{0.0};
    const FracParams p{0.5, kSigma};
    const Complex fd = finite_difference_order(p, 1e-3, zero).values[0];
    const Complex h0 = order_deriv_moments(p, 2).values[0];
    CHECK(std::abs(fd - h0) <= 1e-5);
}

TEST_CASE("scaling the moments scales the evaluated sum") {
    const FracParams p{0.5, kSigma};
    MomentSequence h = frac_moments(p, 64);
    const Complex c(0.3, -1.7);
    for (Complex& v : h.values) v *= c;
    const auto scaled = solve(h).first;
    const FracApprox base = make_approx(p, ApproxKind::frac_derivative);
    const auto t = linspace(-6.0, 6.0, 61);
    const ComplexGrid want = eval_approx(base, t);
    const ComplexGrid got = eval_approx({p, scaled, ApproxKind::frac_derivative}, t);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(got.values[i] - c * want.values[i]) <= 1e-7);
}
