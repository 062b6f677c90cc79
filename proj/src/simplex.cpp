#include "ta/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ta::detail {

namespace {
constexpr double kEps = 1e-9;
}

LpResult solve_lp_min(const std::vector<std::vector<double>>& columns,
                      const std::vector<double>& cost, const std::vector<double>& b) {
    const std::size_t m = b.size();
    const std::size_t n = columns.size();
    if (cost.size() != n) throw std::invalid_argument("cost length vs column count");
    for (const auto& col : columns)
        if (col.size() != m) throw std::invalid_argument("column length vs row count");

    // Tableau: n real columns, m artificial columns, one rhs column.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<double>> tab(m + 1, std::vector<double>(width, 0.0));
    std::vector<double> row_sign(m, 1.0);

    for (std::size_t i = 0; i < m; ++i) {
        row_sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = row_sign[i] * columns[j][i];
        tab[i][n + i] = 1.0;
        tab[i][width - 1] = row_sign[i] * b[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t prow, std::size_t pcol) {
        const double p = tab[prow][pcol];
        for (double& v : tab[prow]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == prow) continue;
            const double f = tab[i][pcol];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[prow][j];
        }
        basis[prow] = pcol;
    };

    auto run_simplex = [&](std::size_t allowed_cols) {
        for (;;) {
            // Bland: first column with negative reduced cost
            std::size_t enter = width;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (tab[m][j] < -kEps) {
                    enter = j;
                    break;
                }
            }
            if (enter == width) return;
            // ratio test, smallest basis label breaks ties
            std::size_t leave = m;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                if (tab[i][enter] <= kEps) continue;
                const double ratio = tab[i][width - 1] / tab[i][enter];
                if (ratio < best - kEps ||
                    (ratio < best + kEps && (leave == m || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) throw std::runtime_error("unbounded linear program");
            pivot(leave, enter);
        }
    };

    // Phase 1: minimize the sum of artificials.
    for (std::size_t j = n; j < n + m; ++j) tab[m][j] = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j) tab[m][j] -= tab[i][j];
    run_simplex(n); // artificials never re-enter

    LpResult out;
    if (tab[m][width - 1] < -1e-7) return out; // residual infeasibility

    // Drive leftover artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        std::size_t j = 0;
        while (j < n && std::abs(tab[i][j]) <= kEps) ++j;
        if (j < n) pivot(i, j);
    }

    // Phase 2: the real objective.
    for (std::size_t j = 0; j < width; ++j) tab[m][j] = 0.0;
    for (std::size_t j = 0; j < n; ++j) tab[m][j] = cost[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) continue;
        const double cb = cost[basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < width; ++j) tab[m][j] -= cb * tab[i][j];
    }
    run_simplex(n);

    out.feasible = true;
    out.objective = -tab[m][width - 1];
    out.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = tab[i][width - 1];

    // Multipliers: the reduced cost of artificial k is -y_k in the
    // sign-flipped system.
    out.dual.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) out.dual[k] = row_sign[k] * -tab[m][n + k];
    return out;
}

} // namespace ta::detail
