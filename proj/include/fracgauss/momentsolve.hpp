#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracgauss/moments.hpp"

namespace fracgauss {

struct Term {
    Complex alpha;
    Complex gamma;
};

/// Weighted node set (alpha_m, gamma_m). Approximations are sum_m alpha_m k(gamma_m t)
/// for a kernel k; the moment equations are h_n = sum_m alpha_m gamma_m^n.
struct ExponentialSum {
    std::vector<Term> terms;
    std::string label;  // "solved", "table1", "table2", ...
    std::optional<double> a;
    std::optional<double> sigma;

    std::size_t size() const noexcept { return terms.size(); }
};

struct SolveReport {
    std::vector<Complex> residuals;  // h_n - sum alpha_m gamma_m^n
    double max_abs_residual = 0.0;
    int model_order = 0;
    double svd_tail = 0.0;  // first discarded singular value (0 when none is discarded)
    double svd_max = 0.0;
    std::vector<int> flagged_nodes;  // term indices with Re{gamma} <= 0
    int merged_nodes = 0;
};

struct SolveOptions {
    double tol = 1e-10;
    int max_order = 16;
    // Weighted Gauss-Newton passes on (alpha, gamma) after the pencil estimate; 0 disables.
    int refine_iterations = 10;
};

/// Recover (alpha_m, gamma_m) from h_0..h_{N-1}.
///
/// 1. Hankel H[i][j] = h_{i+j}, (N - L) x (L + 1) with L = N/2.
/// 2. Model order M: smallest M with sigma_M <= tol * sigma_max.
/// 3. Nodes: eigenvalues of the shift pencil on the leading M left singular vectors.
/// 4. Weights: least squares on the N x M Vandermonde system (column-pivoted QR).
/// 5. Optionally, weighted Gauss-Newton refinement of all parameters.
///
/// Purely real sequences are solved in real arithmetic so that complex nodes come
/// in exact conjugate pairs. Terms are sorted by Re{gamma}, then Im{gamma}.
std::pair<ExponentialSum, SolveReport> solve(const MomentSequence& moments,
                                             const SolveOptions& options = {});

/// sum_m alpha_m gamma_m^n by repeated multiplication.
Complex eval_sum(const ExponentialSum& sum, int n);

/// Residuals h_n - eval_sum(sum, n) for every moment in the sequence.
std::vector<Complex> moment_residuals(const ExponentialSum& sum, const MomentSequence& moments);

enum class Table { table1, table2 };

/// Verbatim coefficient tables: table1 (12 terms, a = 1/2, sigma = 1/sqrt2) and
/// table2 (8 terms, sinc/cosinc fit). The table2 node column is printed as gamma^2;
/// see resolve_squared_nodes.
ExponentialSum load_table(Table which);

/// Replace each node by the principal square root of the stored value.
ExponentialSum resolve_squared_nodes(const ExponentialSum& sum);

void sort_terms(ExponentialSum& sum);

}  // namespace fracgauss
