#include "fracgauss/momentsolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "fracgauss/error.hpp"

namespace fracgauss {
namespace {

constexpr double kMergeDistance = 1e-12;

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

bool is_real_sequence(const std::vector<Complex>& values) {
    return std::all_of(values.begin(), values.end(),
                       [](const Complex& v) { return v.imag() == 0.0; });
}

template <typename Matrix>
Matrix hankel(const std::vector<Complex>& h, int rows, int cols) {
    Matrix y(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
                y(i, j) = h[i + j].real();
            } else {
                y(i, j) = h[i + j];
            }
        }
    }
    return y;
}

int numerical_rank(const Eigen::VectorXd& singular, double tol, SolveReport& report) {
    report.svd_max = singular.size() > 0 ? singular(0) : 0.0;
    if (!(report.svd_max > 0.0) || !std::isfinite(report.svd_max)) {
        throw Error(ErrorCode::kRank, "moment sequence has no numerically nonzero content");
    }
    int rank = 0;
    while (rank < singular.size() && singular(rank) > tol * report.svd_max) ++rank;
    report.svd_tail = rank < singular.size() ? singular(rank) : 0.0;
    return rank;
}

// Nodes from the shift structure of the dominant left singular subspace:
// U_M = Z T with Z[i][m] = z_m^i, so pinv(U_top) U_bot = T^-1 diag(z) T.
template <typename Matrix>
std::vector<Complex> pencil_nodes(const Matrix& y, double tol, int max_order, SolveReport& report) {
    Eigen::JacobiSVD<Matrix> svd(y, Eigen::ComputeThinU);
    const int rank = numerical_rank(svd.singularValues(), tol, report);
    if (rank > max_order) {
        throw Error(ErrorCode::kRank, "numerical rank " + std::to_string(rank) +
                                          " exceeds max_order " + std::to_string(max_order));
    }
    if (rank > y.rows() - 1) {
        throw Error(ErrorCode::kRank, "not enough moments to resolve rank " + std::to_string(rank));
    }
    const Matrix u = svd.matrixU().leftCols(rank);
    const Matrix u_top = u.topRows(u.rows() - 1);
    const Matrix u_bot = u.bottomRows(u.rows() - 1);
    const Matrix shift = u_top.colPivHouseholderQr().solve(u_bot);

    std::vector<Complex> nodes;
    if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        Eigen::EigenSolver<Matrix> eig(shift, false);
        if (eig.info() != Eigen::Success) {
            throw Error(ErrorCode::kConvergence, "real eigen-solve of the shift pencil failed");
        }
        for (int i = 0; i < rank; ++i) nodes.push_back(eig.eigenvalues()(i));
    } else {
        Eigen::ComplexEigenSolver<Matrix> eig(shift, false);
        if (eig.info() != Eigen::Success) {
            throw Error(ErrorCode::kConvergence, "complex eigen-solve of the shift pencil failed");
        }
        for (int i = 0; i < rank; ++i) nodes.push_back(eig.eigenvalues()(i));
    }
    return nodes;
}

std::vector<Complex> merge_coincident(const std::vector<Complex>& nodes, int& merged) {
    std::vector<Complex> unique;
    for (const Complex& z : nodes) {
        const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Complex& u) {
            return std::abs(u - z) < kMergeDistance;
        });
        if (seen) {
            ++merged;
        } else {
            unique.push_back(z);
        }
    }
    return unique;
}

VectorXcd vandermonde_weights(const std::vector<Complex>& h, const std::vector<Complex>& nodes) {
    const int n_rows = static_cast<int>(h.size());
    const int n_cols = static_cast<int>(nodes.size());
    MatrixXcd v(n_rows, n_cols);
    for (int m = 0; m < n_cols; ++m) {
        Complex p = 1.0;
        for (int n = 0; n < n_rows; ++n) {
            v(n, m) = p;
            p *= nodes[m];
        }
    }
    VectorXcd rhs(n_rows);
    for (int n = 0; n < n_rows; ++n) rhs(n) = h[n];
    return v.colPivHouseholderQr().solve(rhs);
}

// For a real moment sequence the node set is closed under conjugation; make the
// weights respect that exactly.
void symmetrize_conjugate_pairs(ExponentialSum& sum) {
    auto& terms = sum.terms;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].gamma.imag() == 0.0) {
            terms[i].alpha = terms[i].alpha.real();
            continue;
        }
        if (terms[i].gamma.imag() < 0.0) continue;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if (terms[j].gamma == std::conj(terms[i].gamma)) {
                const Complex avg = 0.5 * (terms[i].alpha + std::conj(terms[j].alpha));
                terms[i].alpha = avg;
                terms[j].alpha = std::conj(avg);
                break;
            }
        }
    }
}

// Gauss-Newton on h_n = sum alpha_m gamma_m^n with each equation scaled by its
// rounding-noise level sum |alpha_m| |gamma_m|^n. Steps that do not lower the
// scaled residual are rejected and end the iteration.
void refine_terms(std::vector<Term>& terms, const std::vector<Complex>& h, int iterations) {
    const int n_rows = static_cast<int>(h.size());
    const int m_count = static_cast<int>(terms.size());
    std::vector<double> scale(n_rows);
    auto scaled_residual = [&](const std::vector<Term>& ts, VectorXcd* out) {
        double norm2 = 0.0;
        for (int n = 0; n < n_rows; ++n) {
            Complex model = 0.0;
            for (const Term& t : ts) model += t.alpha * std::pow(t.gamma, n);
            const Complex r = (h[n] - model) / scale[n];
            if (out) (*out)(n) = r;
            norm2 += std::norm(r);
        }
        return norm2;
    };
    for (int n = 0; n < n_rows; ++n) {
        double s = std::abs(h[n]);
        for (const Term& t : terms) s += std::abs(t.alpha) * std::pow(std::abs(t.gamma), n);
        scale[n] = s > 0.0 ? s : 1.0;
    }
    VectorXcd r(n_rows);
    double current = scaled_residual(terms, &r);
    for (int it = 0; it < iterations; ++it) {
        MatrixXcd jac(n_rows, 2 * m_count);
        for (int n = 0; n < n_rows; ++n) {
            for (int m = 0; m < m_count; ++m) {
                const Complex g = terms[m].gamma;
                jac(n, m) = std::pow(g, n) / scale[n];
                jac(n, m_count + m) =
                    n == 0 ? Complex(0.0) : terms[m].alpha * double(n) * std::pow(g, n - 1) / scale[n];
            }
        }
        const VectorXcd step = jac.colPivHouseholderQr().solve(r);
        std::vector<Term> trial = terms;
        for (int m = 0; m < m_count; ++m) {
            trial[m].alpha += step(m);
            trial[m].gamma += step(m_count + m);
        }
        VectorXcd trial_r(n_rows);
        const double next = scaled_residual(trial, &trial_r);
        if (!(next < current)) break;
        terms = std::move(trial);
        r = trial_r;
        current = next;
    }
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void sort_terms(ExponentialSum& sum) {
    std::stable_sort(sum.terms.begin(), sum.terms.end(), [](const Term& x, const Term& y) {
        if (x.gamma.real() != y.gamma.real()) return x.gamma.real() < y.gamma.real();
        return x.gamma.imag() < y.gamma.imag();
    });
}

std::pair<ExponentialSum, SolveReport> solve(const MomentSequence& moments,
                                             const SolveOptions& options) {
    const auto& h = moments.values;
    const int count = static_cast<int>(h.size());
    if (!(options.tol > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "solve: tol must be positive");
    }
    if (options.max_order < 1 || count < 2 * options.max_order) {
        throw Error(ErrorCode::kInvalidArgument,
                    "solve: need at least 2*max_order moments (have " + std::to_string(count) +
                        ", max_order " + std::to_string(options.max_order) + ")");
    }
    if (!std::all_of(h.begin(), h.end(), finite)) {
        throw Error(ErrorCode::kInvalidArgument, "solve: non-finite moment");
    }

    const int cols_minus_one = count / 2;
    const int rows = count - cols_minus_one;
    const bool real_input = is_real_sequence(h);

    SolveReport report;
    const std::vector<Complex> raw_nodes =
        real_input ? pencil_nodes(hankel<Eigen::MatrixXd>(h, rows, cols_minus_one + 1), options.tol,
                                  options.max_order, report)
                   : pencil_nodes(hankel<MatrixXcd>(h, rows, cols_minus_one + 1), options.tol,
                                  options.max_order, report);
    const std::vector<Complex> nodes = merge_coincident(raw_nodes, report.merged_nodes);
    if (!std::all_of(nodes.begin(), nodes.end(), finite)) {
        throw Error(ErrorCode::kConvergence, "solve: non-finite node");
    }

    const VectorXcd weights = vandermonde_weights(h, nodes);
    ExponentialSum sum;
    sum.label = "solved";
    if (moments.params) {
        sum.a = moments.params->a;
        sum.sigma = moments.params->sigma;
    }
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        if (!finite(weights(m))) {
            throw Error(ErrorCode::kConvergence, "solve: non-finite weight");
        }
        sum.terms.push_back({weights(m), nodes[m]});
    }
    if (options.refine_iterations > 0) refine_terms(sum.terms, h, options.refine_iterations);
    if (real_input) symmetrize_conjugate_pairs(sum);
    sort_terms(sum);

    report.model_order = static_cast<int>(sum.size());
    report.residuals = moment_residuals(sum, moments);
    for (const Complex& r : report.residuals) {
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
    }
    for (std::size_t m = 0; m < sum.size(); ++m) {
        if (sum.terms[m].gamma.real() <= 0.0) report.flagged_nodes.push_back(static_cast<int>(m));
    }
    return {std::move(sum), std::move(report)};
}

Complex eval_sum(const ExponentialSum& sum, int n) {
    if (n < 0) {
        throw Error(ErrorCode::kInvalidArgument, "eval_sum: n must be non-negative");
    }
    Complex total = 0.0;
    for (const Term& term : sum.terms) {
        Complex power = 1.0;
        for (int k = 0; k < n; ++k) power *= term.gamma;
        total += term.alpha * power;
    }
    return total;
}

std::vector<Complex> moment_residuals(const ExponentialSum& sum, const MomentSequence& moments) {
    std::vector<Complex> residuals(moments.size());
    std::vector<Complex> powers(sum.size(), Complex(1.0));
    for (std::size_t n = 0; n < moments.size(); ++n) {
        Complex model = 0.0;
        for (std::size_t m = 0; m < sum.size(); ++m) {
            model += sum.terms[m].alpha * powers[m];
            powers[m] *= sum.terms[m].gamma;
        }
        residuals[n] = moments.values[n] - model;
    }
    return residuals;
}

ExponentialSum load_table(Table which) {
    ExponentialSum sum;
    if (which == Table::table1) {
        sum.label = "table1";
        sum.a = 0.5;
        sum.sigma = 1.0 / std::sqrt(2.0);
        sum.terms = {
            {{-0.002327462216272, -0.002323117038281}, {0.022707194026268, -0.000014485869526}},
            {{-0.008686498484022, -0.008672831744140}, {0.088058420558651, -0.000050483776843}},
            {{-0.017746649906246, -0.017725233118614}, {0.188199334944285, -0.000090762508709}},
            {{-0.028479502359746, -0.028455359343906}, {0.311644959787523, -0.000118301948941}},
            {{-0.040781085680949, -0.040758739735612}, {0.445550822358306, -0.000124204777278}},
            {{-0.055691041043028, -0.055672403045923}, {0.578033122632225, -0.000110160892971}},
            {{-0.075799236577609, -0.075783432858215}, {0.699719488265476, -0.000084621403249}},
            {{-0.106825493665143, -0.106809444597271}, {0.804243109619030, -0.000056714249345}},
            {{2.224002927119579, 2.223687081665376}, {1.001024232778366, 0.000000290415923}},
            {{-0.846706907066594, -0.846588952992167}, {0.986812368161672, -0.000003755178001}},
            {{-0.296187315352343, -0.296147582995713}, {0.948969382632748, -0.000014668011082}},
            {{-0.163403417748510, -0.163381667176418}, {0.887911302390365, -0.000032513183747}},
        };
    } else {
        sum.label = "table2";
        sum.terms = {
            {{-0.117532571756027, -0.003575367485193}, {0.003599251866768, 0.023031988828263}},
            {{-0.117532571756027, 0.003575367485193}, {0.003599251866768, -0.023031988828263}},
            {{2.658250413824904, -0.872108421067261}, {0.015512727403264, 0.023419328488677}},
            {{2.658250413824904, 0.872108421067261}, {0.015512727403264, -0.023419328488677}},
            {{9.141742362072840, -34.331838882055756}, {0.032137996250724, 0.006297276091330}},
            {{9.141742362072840, 34.331838882055756}, {0.032137996250724, -0.006297276091330}},
            {{-11.182460204141808, 11.443034213692357}, {0.026033590315800, 0.017203623738202}},
            {{-11.182460204141808, -11.443034213692357}, {0.026033590315800, -0.017203623738202}},
        };
    }
    return sum;
}

ExponentialSum resolve_squared_nodes(const ExponentialSum& sum) {
    ExponentialSum out = sum;
    for (Term& term : out.terms) term.gamma = std::sqrt(term.gamma);
    return out;
}

}  // namespace fracgauss
