#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "korovkin/grid.hpp"
#include "korovkin/simplex.hpp"

namespace korovkin {

/// A finite basis of test functions on a shared grid plus an anchor node x.
/// The feasible discrete measures are the nonnegative node weights w with
/// sum_j w_j g_i(t_j) = g_i(x) for every basis element g_i.
struct MomentSystem {
    std::vector<GridFunction> basis;
    std::size_t anchor;

    MomentSystem(std::vector<GridFunction> basis_, std::size_t anchor_);

    const GridFunction& grid_reference() const { return basis.front(); }
    double anchor_point() const { return basis.front().node(anchor); }
};

/// min and max of sum_j w_j probe(t_j) over the feasible measures. The
/// point mass at the anchor is always feasible, so low <= probe(x) <= high.
std::pair<double, double> representing_measure_extremes(const MomentSystem& sys,
                                                        const GridFunction& probe);

/// True iff the anchor is a determined point: the maximal mass of |t - x|
/// over feasible measures is <= tol, pinning every representing measure to
/// the point mass at x.
bool is_determined(const MomentSystem& sys, double tol = 1e-8);

/// Worst spread max_w sum_j w_j |t_j - x| for the anchor (the is_determined
/// objective, exposed for reports).
double determinacy_objective(const MomentSystem& sys);

/// True iff every grid point x is determined-for-f: the probe extremes
/// collapse onto f(x) within tol at all anchors.
bool extension_space_contains(const std::vector<GridFunction>& basis,
                              const GridFunction& f, double tol = 1e-8);

struct KorovkinReport {
    bool strictly_positive_member;   // some basis element or the basis sum is > 0
    std::size_t determined_points;
    std::size_t grid_points;
    bool verdict;                    // determined fraction == 1 at this resolution
    std::vector<bool> determined;    // per grid point
    std::vector<double> spreads;     // per grid point determinacy objective
};

/// Sweep all grid points, deciding determinacy of each; the verdict is the
/// resolution-m surrogate for the extension space being all of C(K).
KorovkinReport verify_korovkin_set(const std::vector<GridFunction>& test_set,
                                   double tol = 1e-8);

}  // namespace korovkin
