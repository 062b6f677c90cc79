#pragma once

#include <cstddef>
#include <vector>

namespace ta::detail {

struct LpResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> x;    // primal solution, one entry per column
    std::vector<double> dual; // multipliers of the equality constraints
};

/// Minimizes cost^T x subject to A x = b, x >= 0, by a dense two-phase
/// tableau simplex with Bland's rule. `columns` holds A column-wise; every
/// column has b.size() entries. Sized for small certified-norm programs
/// (tens of rows, hundreds of columns).
LpResult solve_lp_min(const std::vector<std::vector<double>>& columns,
                      const std::vector<double>& cost, const std::vector<double>& b);

} // namespace ta::detail
