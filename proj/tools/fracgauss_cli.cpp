// fracgauss command-line front end. Talks to the library only through fracgauss.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracgauss/fracgauss.h"

namespace {

using nlohmann::json;

// Exit code when a solve succeeds but misses the residual contract
// max|h_n - sum alpha gamma^n| <= 10 tol max|h_n|.
constexpr int kExitResidual = 12;

struct Failure {
    int code;
    std::string message;
};

void check(fg_status status) {
    if (status != FG_OK) throw Failure{static_cast<int>(status), fg_last_error_message()};
}

struct SumDeleter {
    void operator()(fg_sum* s) const { fg_sum_free(s); }
};
using SumPtr = std::unique_ptr<fg_sum, SumDeleter>;

SumPtr adopt(fg_sum* raw) { return SumPtr(raw); }

std::string take_string(char* raw) {
    std::string out(raw);
    fg_string_free(raw);
    return out;
}

struct Grid {
    double lo;
    double hi;
    int n;
};

std::vector<double> grid_points(const Grid& g) {
    if (g.n < 2 || !(g.lo < g.hi)) throw Failure{FG_INVALID_ARGUMENT, "grid needs n >= 2 and lo < hi"};
    std::vector<double> t(g.n);
    const double step = (g.hi - g.lo) / (g.n - 1);
    for (int i = 0; i < g.n; ++i) t[i] = g.lo + i * step;
    t.back() = g.hi;
    return t;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Columns: axis, then (re, im) for each complex column, then extra real columns.
std::string csv(const std::vector<std::string>& header, const std::vector<double>& axis,
                const std::vector<const std::vector<fg_complex>*>& complex_cols,
                const std::vector<const std::vector<double>*>& real_cols = {}) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';
    for (std::size_t r = 0; r < axis.size(); ++r) {
        out += num(axis[r]);
        for (const auto* col : complex_cols) out += ',' + num((*col)[r].re) + ',' + num((*col)[r].im);
        for (const auto* col : real_cols) out += ',' + num((*col)[r]);
        out += '\n';
    }
    return out;
}

void emit(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw Failure{FG_IO, "cannot open " + tmp + " for writing"};
        file << contents;
        file.close();
        if (!file) {
            std::remove(tmp.c_str());
            throw Failure{FG_IO, "write failed for " + tmp};
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Failure{FG_IO, "cannot rename " + tmp + " to " + path + ": " + ec.message()};
    }
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Failure{FG_IO, "cannot open " + path};
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

struct Config {
    double a = 0.5;
    double sigma = 1.0 / std::sqrt(2.0);
    int moments = 64;
    double tol = 1e-10;
    int max_order = 16;
    std::vector<double> grid;
    std::string out;
    std::string out_dir = ".";
    std::string table;
    std::string sum_path;
    std::string sweep;
    std::string dawson_impl = "reference";
    bool with_oracle = false;
    bool spectrum = false;
    bool dawson = false;
    double delta_a = 1e-3;
};

Grid grid_or(const Config& c, Grid fallback) {
    if (c.grid.empty()) return fallback;
    if (c.grid.size() != 3) throw Failure{FG_INVALID_ARGUMENT, "--grid takes lo hi n"};
    const double n = c.grid[2];
    if (n != std::floor(n)) throw Failure{FG_INVALID_ARGUMENT, "--grid n must be an integer"};
    return {c.grid[0], c.grid[1], static_cast<int>(n)};
}

constexpr Grid kTimeGrid{-6.0, 6.0, 481};
constexpr Grid kFrequencyGrid{0.0, 6.0, 241};

// table2 is stored with squared nodes; every consumer wants gamma itself.
SumPtr load_table(const std::string& name) {
    fg_sum* raw = nullptr;
    if (name == "table1") {
        check(fg_sum_load_table(FG_TABLE1, &raw));
        return adopt(raw);
    }
    if (name == "table2") {
        check(fg_sum_load_table(FG_TABLE2, &raw));
        SumPtr stored = adopt(raw);
        check(fg_sum_resolve_squared_nodes(stored.get(), &raw));
        return adopt(raw);
    }
    throw Failure{FG_INVALID_ARGUMENT, "unknown table '" + name + "' (table1 or table2)"};
}

SumPtr load_sum_file(const std::string& path) {
    const std::string text = slurp(path);
    fg_sum* raw = nullptr;
    check(fg_sum_from_json(text.c_str(), &raw));
    return adopt(raw);
}

std::string label_of(const fg_sum* sum) {
    char* raw = nullptr;
    check(fg_sum_label(sum, &raw));
    return take_string(raw);
}

std::optional<std::pair<double, double>> params_of(const fg_sum* sum) {
    int has = 0;
    double a = 0.0;
    double sigma = 0.0;
    check(fg_sum_params(sum, &has, &a, &sigma));
    if (!has) return std::nullopt;
    return std::make_pair(a, sigma);
}

struct Solved {
    SumPtr sum;
    fg_solve_report report{};
    std::vector<fg_complex> residuals;
    double max_moment = 0.0;
};

Solved run_solve(fg_moment_kind kind, const Config& c) {
    Solved s;
    std::vector<fg_complex> h(std::max(c.moments, 0));
    check(fg_moments(kind, c.a, c.sigma, c.moments, h.data()));
    for (const fg_complex& v : h) s.max_moment = std::max(s.max_moment, std::hypot(v.re, v.im));
    s.residuals.resize(h.size());
    fg_sum* raw = nullptr;
    check(fg_solve(kind, c.a, c.sigma, c.moments, c.tol, c.max_order, &raw, &s.report,
                   s.residuals.data()));
    s.sum = adopt(raw);
    return s;
}

// The sum an eval/error command works on: --sum file, --table, or a fresh solve.
SumPtr resolve_sum(const Config& c, fg_moment_kind kind = FG_MOMENTS_FRACTIONAL) {
    if (!c.sum_path.empty() && !c.table.empty()) {
        throw Failure{FG_INVALID_ARGUMENT, "--sum and --table are mutually exclusive"};
    }
    if (!c.sum_path.empty()) return load_sum_file(c.sum_path);
    if (!c.table.empty()) return load_table(c.table);
    return run_solve(kind, c).sum;
}

json complex_pair(const fg_complex& z) { return json::array({z.re, z.im}); }

int cmd_solve(fg_moment_kind kind, const Config& c) {
    Solved s = run_solve(kind, c);
    char* raw = nullptr;
    check(fg_sum_to_json(s.sum.get(), &raw));
    json doc = json::parse(take_string(raw));
    json residuals = json::array();
    for (const fg_complex& r : s.residuals) residuals.push_back(complex_pair(r));
    const double bound = 10.0 * c.tol * s.max_moment;
    doc["report"] = {{"model_order", s.report.model_order},
                     {"max_abs_residual", s.report.max_abs_residual},
                     {"residual_bound", bound},
                     {"svd_max", s.report.svd_max},
                     {"svd_tail", s.report.svd_tail},
                     {"merged_nodes", s.report.merged_nodes},
                     {"flagged_nodes", s.report.flagged_nodes},
                     {"residuals", residuals}};
    emit(c.out, doc.dump(2) + "\n");
    if (s.report.max_abs_residual > bound) {
        std::cerr << "warning: max residual " << s.report.max_abs_residual << " exceeds "
                  << bound << "\n";
        return kExitResidual;
    }
    return 0;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }
double cosinc(double x) { return x == 0.0 ? 0.0 : (1.0 - std::cos(x)) / x; }

std::string eval_csv(const fg_sum* sum, const Config& c) {
    const auto params = params_of(sum);
    const bool sinc_fit = label_of(sum) == "table2";
    if (c.spectrum) {
        if (!params) throw Failure{FG_INVALID_ARGUMENT, "--spectrum needs a sum with a and sigma"};
        const std::vector<double> w = grid_points(grid_or(c, kFrequencyGrid));
        std::vector<fg_complex> approx(w.size()), exact(w.size());
        check(fg_spectrum(sum, w.data(), static_cast<int>(w.size()), approx.data(), exact.data()));
        std::vector<double> abs_approx, abs_exact;
        for (std::size_t i = 0; i < w.size(); ++i) {
            abs_approx.push_back(std::hypot(approx[i].re, approx[i].im));
            abs_exact.push_back(std::hypot(exact[i].re, exact[i].im));
        }
        return csv({"axis", "re", "im", "re_exact", "im_exact", "abs", "abs_exact"}, w,
                   {&approx, &exact}, {&abs_approx, &abs_exact});
    }
    const std::vector<double> t = grid_points(grid_or(c, kTimeGrid));
    const int n = static_cast<int>(t.size());
    std::vector<fg_complex> values(t.size());
    if (sinc_fit) {
        check(fg_sinc_cosinc_approx(sum, t.data(), n, values.data()));
    } else {
        const fg_dawson_impl impl =
            c.dawson_impl == "rational" ? FG_DAWSON_RATIONAL : FG_DAWSON_REFERENCE;
        check(fg_eval_approx(sum, t.data(), n, impl, values.data()));
    }
    if (!c.with_oracle) return csv({"axis", "re", "im"}, t, {&values});
    std::vector<fg_complex> exact(t.size());
    if (sinc_fit) {
        for (int i = 0; i < n; ++i) exact[i] = {sinc(t[i]), cosinc(t[i])};
    } else {
        if (!params) throw Failure{FG_INVALID_ARGUMENT, "--with-oracle needs a sum with a and sigma"};
        check(fg_oracle_eval(params->first, params->second, t.data(), n, exact.data()));
    }
    return csv({"axis", "re", "im", "re_exact", "im_exact"}, t, {&values, &exact});
}

std::vector<double> parse_sweep(const std::string& text) {
    double lo = 0.0, step = 0.0, hi = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' || !(step > 0.0) || hi < lo) {
        throw Failure{FG_INVALID_ARGUMENT, "--sweep-a expects lo:step:hi with step > 0"};
    }
    std::vector<double> values;
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (int k = 0; k < count; ++k) values.push_back(lo + k * step);
    return values;
}

int cmd_eval(const Config& c) {
    if (c.sweep.empty()) {
        SumPtr sum = resolve_sum(c);
        emit(c.out, eval_csv(sum.get(), c));
        return 0;
    }
    if (!c.table.empty() || !c.sum_path.empty()) {
        throw Failure{FG_INVALID_ARGUMENT, "--sweep-a solves each a itself; drop --table/--sum"};
    }
    std::filesystem::create_directories(c.out_dir);
    for (double a : parse_sweep(c.sweep)) {
        Config one = c;
        one.a = a;
        SumPtr sum = run_solve(FG_MOMENTS_FRACTIONAL, one).sum;
        char name[64];
        std::snprintf(name, sizeof name, "%s_a%.4f.csv", c.spectrum ? "spectrum" : "eval", a);
        emit((std::filesystem::path(c.out_dir) / name).string(), eval_csv(sum.get(), one));
    }
    return 0;
}

int cmd_error_dawson(const Config& c) {
    SumPtr sum = c.sum_path.empty() ? load_table(c.table.empty() ? "table2" : c.table)
                                    : load_sum_file(c.sum_path);
    double eps1 = 0.0, k = 0.0, scan = 0.0, near1 = 0.0, far1 = 0.0;
    check(fg_error_eps1(sum.get(), -200.0, 200.0, 200000, &eps1));
    check(fg_max_inequality_constant(sum.get(), &k));
    check(fg_scan_max_weighted_gaussian_sum(sum.get(), 200.0, 200000, &scan));
    check(fg_bound_near_zero(eps1, 1.0, &near1));
    check(fg_bound_far(sum.get(), 1.0, &far1));
    fg_domination_report d{};
    check(fg_dawson_domination(sum.get(), eps1, 200.0, 20000, &d));
    const bool pass = d.near_pass && d.far_pass && d.exact_zero && d.odd && scan <= k;
    const json doc = {{"label", label_of(sum.get())},
                      {"eps1", eps1},
                      {"max_inequality_constant", k},
                      {"max_inequality_scan", scan},
                      {"bound_near_zero_at_1", near1},
                      {"bound_far_at_1", far1},
                      {"max_error", d.max_error},
                      {"worst_near_ratio", d.worst_near_ratio},
                      {"worst_far_ratio", d.worst_far_ratio},
                      {"worst_min_ratio", d.worst_min_ratio},
                      {"scan_points", d.points},
                      {"zero_at_origin", d.exact_zero != 0},
                      {"odd", d.odd != 0},
                      {"domination", pass ? "pass" : "fail"}};
    emit(c.out, doc.dump(2) + "\n");
    return 0;
}

int cmd_error(const Config& c) {
    if (c.dawson) return cmd_error_dawson(c);
    SumPtr sum = resolve_sum(c);
    const auto params = params_of(sum.get());
    if (!params) throw Failure{FG_INVALID_ARGUMENT, "error needs a sum with a and sigma"};
    double closed = 0.0, quad = 0.0;
    check(fg_l2_error_closed_form(sum.get(), &closed));
    check(fg_l2_error_quadrature(sum.get(), 0, -INFINITY, INFINITY, &quad));
    const std::vector<double> t = grid_points(grid_or(c, kTimeGrid));
    const int n = static_cast<int>(t.size());
    std::vector<fg_complex> approx(t.size()), exact(t.size());
    check(fg_eval_approx(sum.get(), t.data(), n, FG_DAWSON_REFERENCE, approx.data()));
    check(fg_oracle_eval(params->first, params->second, t.data(), n, exact.data()));
    double max_pointwise = 0.0;
    for (int i = 0; i < n; ++i) {
        max_pointwise = std::max(max_pointwise,
                                 std::hypot(approx[i].re - exact[i].re, approx[i].im - exact[i].im));
    }
    int size = 0;
    check(fg_sum_size(sum.get(), &size));
    const double scale = std::max(std::fabs(closed), std::fabs(quad));
    const json doc = {{"label", label_of(sum.get())},
                      {"a", params->first},
                      {"sigma", params->second},
                      {"terms", size},
                      {"l2_closed_form", closed},
                      {"l2_quadrature", quad},
                      {"relative_gap", scale > 0.0 ? std::fabs(closed - quad) / scale : 0.0},
                      {"max_pointwise", max_pointwise},
                      {"grid_range", {t.front(), t.back()}}};
    emit(c.out, doc.dump(2) + "\n");
    return 0;
}

int cmd_order_deriv(const Config& c) {
    const std::vector<double> t = grid_points(grid_or(c, kTimeGrid));
    const int n = static_cast<int>(t.size());
    SumPtr sum = run_solve(FG_MOMENTS_ORDER_DERIVATIVE, c).sum;
    std::vector<fg_complex> analytic(t.size()), fd(t.size());
    check(fg_eval_approx(sum.get(), t.data(), n, FG_DAWSON_REFERENCE, analytic.data()));
    check(fg_finite_difference_order(c.a, c.sigma, c.delta_a, t.data(), n, c.moments, c.tol,
                                     c.max_order, fd.data()));
    emit(c.out, csv({"axis", "re", "im", "re_fd", "im_fd"}, t, {&analytic, &fd}));
    return 0;
}

void add_solver_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--a", c.a, "Derivative order a")->capture_default_str();
    cmd->add_option("--sigma", c.sigma, "Gaussian width sigma")->capture_default_str();
    cmd->add_option("--moments", c.moments, "Number of moments")->capture_default_str();
    cmd->add_option("--tol", c.tol, "Relative SVD truncation tolerance")->capture_default_str();
    cmd->add_option("--max-order", c.max_order, "Largest accepted model order")->capture_default_str();
}

void add_sum_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--table", c.table, "Use a tabulated sum (table1, table2)");
    cmd->add_option("--sum", c.sum_path, "Read the sum from a JSON file");
    cmd->add_option("--grid", c.grid, "Grid as lo hi n")->expected(3);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian-sum approximations of fractional derivatives of the Gaussian and of "
                 "Dawson's integral"};
    app.require_subcommand(1);
    Config c;

    auto* solve_frac = app.add_subcommand("solve-frac", "Solve the fractional-derivative moment problem");
    auto* solve_order = app.add_subcommand("solve-order", "Solve the order-derivative moment problem");
    auto* solve_sinc = app.add_subcommand("solve-sinc", "Solve the sinc/cosinc moment problem");
    for (auto* cmd : {solve_frac, solve_order, solve_sinc}) {
        add_solver_options(cmd, c);
        cmd->add_option("--out", c.out, "Output JSON path (default stdout)");
    }

    auto* eval = app.add_subcommand("eval", "Evaluate a sum (and optionally the oracle) on a grid");
    add_solver_options(eval, c);
    add_sum_options(eval, c);
    eval->add_flag("--with-oracle", c.with_oracle, "Add exact re_exact, im_exact columns");
    eval->add_flag("--spectrum", c.spectrum, "Evaluate spectra on a frequency grid instead");
    eval->add_option("--sweep-a", c.sweep, "Solve and evaluate for a = lo:step:hi");
    eval->add_option("--out-dir", c.out_dir, "Directory for --sweep-a files")->capture_default_str();
    eval->add_option("--dawson-impl", c.dawson_impl, "reference or rational")
        ->check(CLI::IsMember({"reference", "rational"}))
        ->capture_default_str();
    eval->add_option("--out", c.out, "Output CSV path (default stdout)");

    auto* error = app.add_subcommand("error", "L2 and pointwise error report as JSON");
    add_solver_options(error, c);
    add_sum_options(error, c);
    error->add_flag("--dawson", c.dawson, "Dawson rational approximation bounds instead");
    error->add_option("--out", c.out, "Output JSON path (default stdout)");

    auto* order = app.add_subcommand("order-deriv", "Analytic vs finite-difference d/da as CSV");
    add_solver_options(order, c);
    order->add_option("--grid", c.grid, "Grid as lo hi n")->expected(3);
    order->add_option("--delta-a", c.delta_a, "Finite-difference step in a")->capture_default_str();
    order->add_option("--out", c.out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return FG_INVALID_ARGUMENT;
    }

    try {
        if (*solve_frac) return cmd_solve(FG_MOMENTS_FRACTIONAL, c);
        if (*solve_order) return cmd_solve(FG_MOMENTS_ORDER_DERIVATIVE, c);
        if (*solve_sinc) return cmd_solve(FG_MOMENTS_SINC, c);
        if (*eval) return cmd_eval(c);
        if (*error) return cmd_error(c);
        if (*order) return cmd_order_deriv(c);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return FG_INTERNAL;
    }
    return FG_INTERNAL;
}
