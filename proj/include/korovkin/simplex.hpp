#pragma once

#include <cstddef>
#include <vector>

namespace korovkin {

enum class LpStatus { Optimal, Infeasible, Unbounded, Breakdown };

const char* to_string(LpStatus s);

struct LpResult {
    LpStatus status;
    double objective = 0.0;
    std::vector<double> solution;  // x >= 0, one entry per variable
};

enum class LpSense { Minimize, Maximize };

/// Solve  min/max c'x  s.t.  A x = b,  x >= 0  with a dense two-phase
/// simplex using Bland's rule. A is row-major, n_rows x n_cols. Pivots
/// below 1e-11 are reported as Breakdown.
LpResult simplex_solve(const std::vector<double>& costs,
                       const std::vector<double>& equality_matrix,
                       const std::vector<double>& rhs, LpSense sense);

}  // namespace korovkin
