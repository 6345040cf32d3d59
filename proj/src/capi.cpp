#include "fracgauss/fracgauss.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fracgauss/dawson_approx.hpp"
#include "fracgauss/error.hpp"
#include "fracgauss/serialize.hpp"

struct fg_sum {
    fracgauss::ExponentialSum sum;
};

namespace {

using namespace fracgauss;

thread_local std::string g_last_error;

fg_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument: return FG_INVALID_ARGUMENT;
        case ErrorCode::kPole: return FG_POLE;
        case ErrorCode::kOverflow: return FG_OVERFLOW;
        case ErrorCode::kRank: return FG_RANK;
        case ErrorCode::kConvergence: return FG_CONVERGENCE;
        case ErrorCode::kDegenerate: return FG_DEGENERATE;
        case ErrorCode::kDomain: return FG_DOMAIN;
        case ErrorCode::kQuadrature: return FG_QUADRATURE;
        case ErrorCode::kNegativeResult: return FG_NEGATIVE_RESULT;
        case ErrorCode::kIo: return FG_IO;
    }
    return FG_INTERNAL;
}

template <typename Body>
fg_status guarded(Body&& body) {
    g_last_error.clear();
    try {
        body();
        return FG_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FG_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FG_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FG_INTERNAL;
    }
}

void require(bool condition, const char* message) {
    if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

void require_array(const void* p, int count, const char* name) {
    require(count >= 0, "negative array length");
    if (count > 0 && p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
}

fg_complex to_c(Complex z) { return {z.real(), z.imag()}; }
Complex from_c(fg_complex z) { return {z.re, z.im}; }

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fg_sum* wrap(ExponentialSum sum) { return new fg_sum{std::move(sum)}; }

const ExponentialSum& unwrap(const fg_sum* sum) {
    require(sum != nullptr, "sum handle is NULL");
    return sum->sum;
}

FracApprox approx_from(const fg_sum* handle, ApproxKind kind) {
    const ExponentialSum& sum = unwrap(handle);
    if (!sum.a || !sum.sigma) {
        throw Error(ErrorCode::kInvalidArgument, "sum does not carry a and sigma");
    }
    return FracApprox{{*sum.a, *sum.sigma}, sum, kind};
}

MomentSequence moments_for(fg_moment_kind kind, double a, double sigma, int count) {
    switch (kind) {
        case FG_MOMENTS_FRACTIONAL: return frac_moments({a, sigma}, count);
        case FG_MOMENTS_ORDER_DERIVATIVE: return order_deriv_moments({a, sigma}, count);
        case FG_MOMENTS_SINC: return sinc_moments(count);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown moment kind");
}

void fill_report(const SolveReport& r, fg_solve_report* out) {
    if (!out) return;
    out->model_order = r.model_order;
    out->max_abs_residual = r.max_abs_residual;
    out->svd_max = r.svd_max;
    out->svd_tail = r.svd_tail;
    out->merged_nodes = r.merged_nodes;
    out->flagged_nodes = static_cast<int>(r.flagged_nodes.size());
}

void copy_grid(const ComplexGrid& grid, fg_complex* out) {
    for (std::size_t i = 0; i < grid.values.size(); ++i) out[i] = to_c(grid.values[i]);
}

}  // namespace

extern "C" {

const char* fg_last_error_message(void) { return g_last_error.c_str(); }

const char* fg_status_name(fg_status status) {
    switch (status) {
        case FG_OK: return "ok";
        case FG_INVALID_ARGUMENT: return "invalid argument";
        case FG_RANK: return "rank error";
        case FG_CONVERGENCE: return "convergence error";
        case FG_IO: return "i/o error";
        case FG_DOMAIN: return "domain error";
        case FG_POLE: return "pole";
        case FG_OVERFLOW: return "overflow";
        case FG_QUADRATURE: return "quadrature error";
        case FG_DEGENERATE: return "degenerate";
        case FG_NEGATIVE_RESULT: return "negative result";
        case FG_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void fg_string_free(char* text) { std::free(text); }

fg_status fg_moments(fg_moment_kind kind, double a, double sigma, int count, fg_complex* out) {
    return guarded([&] {
        require_array(out, count, "out");
        const MomentSequence h = moments_for(kind, a, sigma, count);
        for (int n = 0; n < count; ++n) out[n] = to_c(h.values[n]);
    });
}

fg_status fg_solve(fg_moment_kind kind, double a, double sigma, int count, double tol,
                   int max_order, fg_sum** out_sum, fg_solve_report* report,
                   fg_complex* residuals) {
    return guarded([&] {
        require(out_sum != nullptr, "out_sum is NULL");
        auto [sum, rep] = solve(moments_for(kind, a, sigma, count), {tol, max_order});
        fill_report(rep, report);
        if (residuals) {
            for (std::size_t n = 0; n < rep.residuals.size(); ++n) residuals[n] = to_c(rep.residuals[n]);
        }
        *out_sum = wrap(std::move(sum));
    });
}

fg_status fg_solve_moments(const fg_complex* moments, int count, double tol, int max_order,
                           fg_sum** out_sum, fg_solve_report* report) {
    return guarded([&] {
        require_array(moments, count, "moments");
        require(out_sum != nullptr, "out_sum is NULL");
        MomentSequence h;
        h.kind = MomentKind::fractional;
        for (int n = 0; n < count; ++n) h.values.push_back(from_c(moments[n]));
        auto [sum, rep] = solve(h, {tol, max_order});
        fill_report(rep, report);
        *out_sum = wrap(std::move(sum));
    });
}

fg_status fg_sum_create(const fg_complex* alpha, const fg_complex* gamma, int count, double a,
                        double sigma, fg_sum** out_sum) {
    return guarded([&] {
        require(count > 0, "a sum needs at least one term");
        require_array(alpha, count, "alpha");
        require_array(gamma, count, "gamma");
        require(out_sum != nullptr, "out_sum is NULL");
        ExponentialSum sum;
        sum.label = "user";
        if (!std::isnan(a)) sum.a = a;
        if (!std::isnan(sigma)) sum.sigma = sigma;
        for (int m = 0; m < count; ++m) sum.terms.push_back({from_c(alpha[m]), from_c(gamma[m])});
        *out_sum = wrap(std::move(sum));
    });
}

void fg_sum_free(fg_sum* sum) { delete sum; }

fg_status fg_sum_size(const fg_sum* sum, int* out_size) {
    return guarded([&] {
        require(out_size != nullptr, "out_size is NULL");
        *out_size = static_cast<int>(unwrap(sum).size());
    });
}

fg_status fg_sum_term(const fg_sum* sum, int index, fg_complex* alpha, fg_complex* gamma) {
    return guarded([&] {
        const ExponentialSum& s = unwrap(sum);
        require(index >= 0 && index < static_cast<int>(s.size()), "term index out of range");
        if (alpha) *alpha = to_c(s.terms[index].alpha);
        if (gamma) *gamma = to_c(s.terms[index].gamma);
    });
}

fg_status fg_sum_params(const fg_sum* sum, int* has_params, double* a, double* sigma) {
    return guarded([&] {
        const ExponentialSum& s = unwrap(sum);
        const bool has = s.a.has_value() && s.sigma.has_value();
        if (has_params) *has_params = has ? 1 : 0;
        if (a) *a = s.a.value_or(std::nan(""));
        if (sigma) *sigma = s.sigma.value_or(std::nan(""));
    });
}

fg_status fg_sum_label(const fg_sum* sum, char** out_label) {
    return guarded([&] {
        require(out_label != nullptr, "out_label is NULL");
        *out_label = copy_string(unwrap(sum).label);
    });
}

fg_status fg_sum_load_table(fg_table table, fg_sum** out_sum) {
    return guarded([&] {
        require(out_sum != nullptr, "out_sum is NULL");
        require(table == FG_TABLE1 || table == FG_TABLE2, "unknown table");
        *out_sum = wrap(load_table(table == FG_TABLE1 ? Table::table1 : Table::table2));
    });
}

fg_status fg_sum_resolve_squared_nodes(const fg_sum* sum, fg_sum** out_sum) {
    return guarded([&] {
        require(out_sum != nullptr, "out_sum is NULL");
        *out_sum = wrap(resolve_squared_nodes(unwrap(sum)));
    });
}

fg_status fg_sum_to_json(const fg_sum* sum, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out_json is NULL");
        *out_json = copy_string(sum_to_json(unwrap(sum)));
    });
}

fg_status fg_sum_from_json(const char* json, fg_sum** out_sum) {
    return guarded([&] {
        require(json != nullptr && out_sum != nullptr, "NULL argument");
        *out_sum = wrap(sum_from_json(json));
    });
}

fg_status fg_sum_eval_moment(const fg_sum* sum, int n, fg_complex* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = to_c(eval_sum(unwrap(sum), n));
    });
}

fg_status fg_eval_approx(const fg_sum* sum, const double* t, int count, fg_dawson_impl impl,
                         fg_complex* out) {
    return guarded([&] {
        require_array(t, count, "t");
        require_array(out, count, "out");
        FracApprox approx{{}, unwrap(sum), ApproxKind::frac_derivative};
        const DawsonImpl which = impl == FG_DAWSON_RATIONAL ? DawsonImpl::rational : DawsonImpl::reference;
        copy_grid(eval_approx(approx, {t, static_cast<std::size_t>(count)}, which), out);
    });
}

fg_status fg_oracle_eval(double a, double sigma, const double* t, int count, fg_complex* out) {
    return guarded([&] {
        require_array(t, count, "t");
        require_array(out, count, "out");
        copy_grid(oracle_eval({a, sigma}, {t, static_cast<std::size_t>(count)}), out);
    });
}

fg_status fg_oracle_order_eval(double a, double sigma, const double* t, int count,
                               fg_complex* out) {
    return guarded([&] {
        require_array(t, count, "t");
        require_array(out, count, "out");
        copy_grid(oracle_order_eval({a, sigma}, {t, static_cast<std::size_t>(count)}), out);
    });
}

fg_status fg_spectrum(const fg_sum* sum, const double* omega, int count, fg_complex* out_approx,
                      fg_complex* out_exact) {
    return guarded([&] {
        require_array(omega, count, "omega");
        const SpectrumPair pair = spectrum(approx_from(sum, ApproxKind::frac_derivative),
                                           {omega, static_cast<std::size_t>(count)});
        if (out_approx) copy_grid(pair.approx, out_approx);
        if (out_exact) copy_grid(pair.exact, out_exact);
    });
}

fg_status fg_l2_error_closed_form(const fg_sum* sum, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = l2_error_closed_form(approx_from(sum, ApproxKind::frac_derivative));
    });
}

fg_status fg_l2_error_quadrature(const fg_sum* sum, int order_derivative, double lo, double hi,
                                 double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        const ApproxKind kind = order_derivative ? ApproxKind::order_derivative : ApproxKind::frac_derivative;
        *out = l2_error_quadrature(approx_from(sum, kind), {lo, hi});
    });
}

fg_status fg_finite_difference_order(double a, double sigma, double delta_a, const double* t,
                                     int count, int moment_count, double tol, int max_order,
                                     fg_complex* out) {
    return guarded([&] {
        require_array(t, count, "t");
        require_array(out, count, "out");
        copy_grid(finite_difference_order({a, sigma}, delta_a, {t, static_cast<std::size_t>(count)},
                                          moment_count, {tol, max_order}),
                  out);
    });
}

fg_status fg_sinc_cosinc_approx(const fg_sum* sum, const double* x, int count, fg_complex* out) {
    return guarded([&] {
        require_array(x, count, "x");
        require_array(out, count, "out");
        copy_grid(sinc_cosinc_approx(unwrap(sum), {x, static_cast<std::size_t>(count)}), out);
    });
}

fg_status fg_dawson_rational(const fg_sum* sum, const double* x, int count, double* out) {
    return guarded([&] {
        require_array(x, count, "x");
        require_array(out, count, "out");
        const ExponentialSum& s = unwrap(sum);
        for (int i = 0; i < count; ++i) out[i] = dawson_rational(s, x[i]);
    });
}

fg_status fg_dawson_ref(double x, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = dawson_ref(x);
    });
}

fg_status fg_error_eps1(const fg_sum* sum, double lo, double hi, int points, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = error_eps1(unwrap(sum), {lo, hi}, points);
    });
}

fg_status fg_bound_near_zero(double eps1, double x, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = bound_near_zero(eps1, x);
    });
}

fg_status fg_bound_far(const fg_sum* sum, double x, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = bound_far(unwrap(sum), x);
    });
}

fg_status fg_max_inequality_constant(const fg_sum* sum, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = max_inequality_constant(unwrap(sum));
    });
}

fg_status fg_scan_max_weighted_gaussian_sum(const fg_sum* sum, double t_max, int points,
                                            double* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = scan_max_weighted_gaussian_sum(unwrap(sum), t_max, points);
    });
}

fg_status fg_dawson_domination(const fg_sum* sum, double eps1, double x_max, int points,
                               fg_domination_report* out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        const DominationReport r = check_domination(unwrap(sum), eps1, x_max, points);
        *out = {r.eps1,  r.max_error, r.worst_near_ratio, r.worst_far_ratio, r.worst_min_ratio,
                r.points, r.near_pass, r.far_pass,        r.exact_zero,      r.odd};
    });
}

}  // extern "C"
