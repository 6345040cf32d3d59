/* C interface to the fracgauss library.
 *
 * Every function returns an fg_status. On failure a message is available from
 * fg_last_error_message() on the calling thread; each call clears it first.
 * Array arguments are caller-owned; strings returned through char** must be
 * released with fg_string_free, sums with fg_sum_free.
 */
#ifndef FRACGAUSS_H
#define FRACGAUSS_H

#include <stddef.h>

#if defined(_WIN32)
#define FG_API __declspec(dllexport)
#else
#define FG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum fg_status {
    FG_OK = 0,
    FG_INVALID_ARGUMENT = 1,
    FG_RANK = 2,
    FG_CONVERGENCE = 3,
    FG_IO = 4,
    FG_DOMAIN = 5,
    FG_POLE = 6,
    FG_OVERFLOW = 7,
    FG_QUADRATURE = 8,
    FG_DEGENERATE = 9,
    FG_NEGATIVE_RESULT = 10,
    FG_INTERNAL = 11
} fg_status;

typedef struct fg_complex {
    double re;
    double im;
} fg_complex;

typedef struct fg_sum fg_sum;

typedef enum fg_moment_kind {
    FG_MOMENTS_FRACTIONAL = 0,
    FG_MOMENTS_ORDER_DERIVATIVE = 1,
    FG_MOMENTS_SINC = 2
} fg_moment_kind;

typedef enum fg_table { FG_TABLE1 = 0, FG_TABLE2 = 1 } fg_table;

typedef enum fg_dawson_impl { FG_DAWSON_REFERENCE = 0, FG_DAWSON_RATIONAL = 1 } fg_dawson_impl;

typedef struct fg_solve_report {
    int model_order;
    double max_abs_residual;
    double svd_max;
    double svd_tail;
    int merged_nodes;
    int flagged_nodes;
} fg_solve_report;

typedef struct fg_domination_report {
    double eps1;
    double max_error;
    double worst_near_ratio;
    double worst_far_ratio;
    double worst_min_ratio;
    int points;
    int near_pass;
    int far_pass;
    int exact_zero;
    int odd;
} fg_domination_report;

FG_API const char* fg_last_error_message(void);
FG_API const char* fg_status_name(fg_status status);
FG_API void fg_string_free(char* text);

/* Moments h_0..h_{count-1}. a and sigma are ignored for FG_MOMENTS_SINC. */
FG_API fg_status fg_moments(fg_moment_kind kind, double a, double sigma, int count, fg_complex* out);

/* Solve a moment family. report and residuals (length count) may be NULL. */
FG_API fg_status fg_solve(fg_moment_kind kind, double a, double sigma, int count, double tol,
                          int max_order, fg_sum** out_sum, fg_solve_report* report,
                          fg_complex* residuals);

/* Solve caller-supplied moments. */
FG_API fg_status fg_solve_moments(const fg_complex* moments, int count, double tol, int max_order,
                                  fg_sum** out_sum, fg_solve_report* report);

/* Build a sum from arrays. a or sigma may be NaN to leave them unset. */
FG_API fg_status fg_sum_create(const fg_complex* alpha, const fg_complex* gamma, int count,
                               double a, double sigma, fg_sum** out_sum);
FG_API void fg_sum_free(fg_sum* sum);
FG_API fg_status fg_sum_size(const fg_sum* sum, int* out_size);
FG_API fg_status fg_sum_term(const fg_sum* sum, int index, fg_complex* alpha, fg_complex* gamma);
/* has_params receives 1 when a and sigma are set, 0 otherwise. */
FG_API fg_status fg_sum_params(const fg_sum* sum, int* has_params, double* a, double* sigma);
FG_API fg_status fg_sum_label(const fg_sum* sum, char** out_label);
FG_API fg_status fg_sum_load_table(fg_table table, fg_sum** out_sum);
FG_API fg_status fg_sum_resolve_squared_nodes(const fg_sum* sum, fg_sum** out_sum);
FG_API fg_status fg_sum_to_json(const fg_sum* sum, char** out_json);
FG_API fg_status fg_sum_from_json(const char* json, fg_sum** out_sum);
FG_API fg_status fg_sum_eval_moment(const fg_sum* sum, int n, fg_complex* out);

/* sum alpha_m g(gamma_m t_j). The sum must carry a and sigma only for the oracle calls. */
FG_API fg_status fg_eval_approx(const fg_sum* sum, const double* t, int count,
                                fg_dawson_impl impl, fg_complex* out);
FG_API fg_status fg_oracle_eval(double a, double sigma, const double* t, int count,
                                fg_complex* out);
FG_API fg_status fg_oracle_order_eval(double a, double sigma, const double* t, int count,
                                      fg_complex* out);

/* Approximate and exact spectra at omega_j >= 0; sum must carry a and sigma. */
FG_API fg_status fg_spectrum(const fg_sum* sum, const double* omega, int count,
                             fg_complex* out_approx, fg_complex* out_exact);

/* L2 error of a fractional-derivative sum (must carry a and sigma). */
FG_API fg_status fg_l2_error_closed_form(const fg_sum* sum, double* out);
/* lo/hi may be +-INFINITY. order_derivative selects the d/da target. */
FG_API fg_status fg_l2_error_quadrature(const fg_sum* sum, int order_derivative, double lo,
                                        double hi, double* out);

FG_API fg_status fg_finite_difference_order(double a, double sigma, double delta_a,
                                            const double* t, int count, int moment_count,
                                            double tol, int max_order, fg_complex* out);

FG_API fg_status fg_sinc_cosinc_approx(const fg_sum* sum, const double* x, int count,
                                       fg_complex* out);
FG_API fg_status fg_dawson_rational(const fg_sum* sum, const double* x, int count, double* out);
FG_API fg_status fg_dawson_ref(double x, double* out);
FG_API fg_status fg_error_eps1(const fg_sum* sum, double lo, double hi, int points, double* out);
FG_API fg_status fg_bound_near_zero(double eps1, double x, double* out);
FG_API fg_status fg_bound_far(const fg_sum* sum, double x, double* out);
FG_API fg_status fg_max_inequality_constant(const fg_sum* sum, double* out);
FG_API fg_status fg_scan_max_weighted_gaussian_sum(const fg_sum* sum, double t_max, int points,
                                                   double* out);
FG_API fg_status fg_dawson_domination(const fg_sum* sum, double eps1, double x_max, int points,
                                      fg_domination_report* out);

#ifdef __cplusplus
}
#endif

#endif /* FRACGAUSS_H */
