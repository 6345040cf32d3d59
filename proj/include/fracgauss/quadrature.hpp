#pragma once

#include <vector>

namespace fracgauss {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule by Newton iteration on P_n from the Chebyshev-like initial guess.
GaussRule gauss_legendre(int n);

/// Integrate f over [lo, hi] with `panels` equal panels of the given rule.
template <typename Result, typename Func>
Result integrate_panels(const GaussRule& rule, Func&& f, double lo, double hi, int panels) {
    Result total{};
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double half = 0.5 * width;
        const double mid = a + half;
        Result panel{};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        }
        total += half * panel;
    }
    return total;
}

}  // namespace fracgauss
