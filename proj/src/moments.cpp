#include "korovkin/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace korovkin {
namespace {

// Constraint matrix rows: one per basis element, columns: one weight per
// grid node. rhs: the anchor values g_i(x).
void build_constraints(const MomentSystem& sys, std::vector<double>& A,
                       std::vector<double>& b) {
    const std::size_t rows = sys.basis.size();
    const std::size_t cols = sys.grid_reference().size();
    A.assign(rows * cols, 0.0);
    b.assign(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) A[i * cols + j] = sys.basis[i][j];
        b[i] = sys.basis[i][sys.anchor];
    }
}

double solve_or_throw(const MomentSystem& sys, const std::vector<double>& costs,
                      LpSense sense) {
    std::vector<double> A, b;
    build_constraints(sys, A, b);
    LpResult r = simplex_solve(costs, A, b, sense);
    if (r.status != LpStatus::Optimal)
        throw std::runtime_error(std::string("representing-measure LP failed: ") +
                                 to_string(r.status));
    return r.objective;
}

}  // namespace

MomentSystem::MomentSystem(std::vector<GridFunction> basis_, std::size_t anchor_)
    : basis(std::move(basis_)), anchor(anchor_) {
    if (basis.empty()) throw std::invalid_argument("MomentSystem: empty basis");
    for (const auto& g : basis)
        if (!g.combinable_with(basis.front()))
            throw std::invalid_argument("MomentSystem: basis elements on different grids");
    if (anchor >= basis.front().size())
        throw std::invalid_argument("MomentSystem: anchor index out of range");
}

std::pair<double, double> representing_measure_extremes(const MomentSystem& sys,
                                                        const GridFunction& probe) {
    if (!probe.combinable_with(sys.grid_reference()))
        throw std::invalid_argument("representing_measure_extremes: probe grid mismatch");
    const std::vector<double>& costs = probe.values();
    double low = solve_or_throw(sys, costs, LpSense::Minimize);
    double high = solve_or_throw(sys, costs, LpSense::Maximize);
    return {low, high};
}

double determinacy_objective(const MomentSystem& sys) {
    const GridFunction& ref = sys.grid_reference();
    const double x = sys.anchor_point();
    std::vector<double> costs(ref.size());
    for (std::size_t j = 0; j < costs.size(); ++j) costs[j] = std::fabs(ref.node(j) - x);
    return solve_or_throw(sys, costs, LpSense::Maximize);
}

bool is_determined(const MomentSystem& sys, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("is_determined: tol must be positive");
    return determinacy_objective(sys) <= tol;
}

bool extension_space_contains(const std::vector<GridFunction>& basis,
                              const GridFunction& f, double tol) {
    if (basis.empty()) throw std::invalid_argument("extension_space_contains: empty basis");
    if (!f.combinable_with(basis.front()))
        throw std::invalid_argument("extension_space_contains: f grid mismatch");
    for (std::size_t x = 0; x < f.size(); ++x) {
        MomentSystem sys(basis, x);
        auto [low, high] = representing_measure_extremes(sys, f);
        if (high - low > tol || std::fabs(low - f[x]) > tol) return false;
    }
    return true;
}

KorovkinReport verify_korovkin_set(const std::vector<GridFunction>& test_set, double tol) {
    if (test_set.empty()) throw std::invalid_argument("verify_korovkin_set: empty test set");
    KorovkinReport report;
    report.grid_points = test_set.front().size();
    report.determined_points = 0;

    report.strictly_positive_member = false;
    for (const auto& g : test_set)
        if (is_strictly_positive(g)) report.strictly_positive_member = true;
    if (!report.strictly_positive_member) {
        // Try the canonical combination: the sum of absolute values.
        GridFunction acc = test_set.front().abs();
        for (std::size_t i = 1; i < test_set.size(); ++i)
            acc = acc + test_set[i].abs();
        report.strictly_positive_member = is_strictly_positive(acc);
    }

    report.determined.resize(report.grid_points, false);
    report.spreads.resize(report.grid_points, 0.0);
    if (!report.strictly_positive_member) {
        // Without a strictly positive member the mass constraint is absent
        // and the determinacy LP can be unbounded; no verdict is claimed.
        report.verdict = false;
        return report;
    }
    for (std::size_t x = 0; x < report.grid_points; ++x) {
        MomentSystem sys(test_set, x);
        report.spreads[x] = determinacy_objective(sys);
        report.determined[x] = report.spreads[x] <= tol;
        if (report.determined[x]) ++report.determined_points;
    }
    report.verdict =
        report.strictly_positive_member && report.determined_points == report.grid_points;
    return report;
}

}  // namespace korovkin
