#include "korovkin/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace korovkin {
namespace {

constexpr double kPivotFloor = 1e-11;

// Dense simplex tableau over the constraints A x = b, x >= 0. Phase I uses
// one artificial variable per row; Bland's rule throughout.
class Tableau {
public:
    Tableau(const std::vector<double>& A, const std::vector<double>& b,
            std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), total_(cols + rows) {
        // Layout: [structural | artificial | rhs], rows_ x (total_+1).
        tab_.assign(rows_ * (total_ + 1), 0.0);
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) = sign * A[i * cols_ + j];
            at(i, cols_ + i) = 1.0;
            rhs(i) = sign * b[i];
            basis_[i] = cols_ + i;
        }
    }

    // Returns Optimal when the reduced costs are nonnegative, Unbounded when
    // an entering column has no positive entry, Breakdown on a tiny pivot.
    LpStatus run(const std::vector<double>& cost, std::size_t active_cols) {
        for (;;) {
            std::vector<double> y = dual_prices(cost);
            std::size_t enter = total_ + 1;
            for (std::size_t j = 0; j < active_cols; ++j) {
                if (is_basic(j)) continue;
                double reduced = cost[j];
                for (std::size_t i = 0; i < rows_; ++i) reduced -= y[i] * at(i, j);
                if (reduced < -1e-10) { enter = j; break; }  // Bland: lowest index
            }
            if (enter > total_) return LpStatus::Optimal;

            std::size_t leave = rows_;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, enter) > kPivotFloor) {
                    double ratio = rhs(i) / at(i, enter);
                    if (ratio < best_ratio - 1e-12 ||
                        (std::fabs(ratio - best_ratio) <= 1e-12 &&
                         (leave == rows_ || basis_[i] < basis_[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == rows_) {
                // No admissible pivot: unbounded if the column is truly
                // nonpositive, breakdown if it only has sub-floor positives.
                for (std::size_t i = 0; i < rows_; ++i)
                    if (at(i, enter) > 0.0) return LpStatus::Breakdown;
                return LpStatus::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    // Drive artificial variables out of the basis after phase I when possible.
    bool eliminate_artificials() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < cols_) continue;
            std::size_t enter = total_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!is_basic(j) && std::fabs(at(i, j)) > kPivotFloor) { enter = j; break; }
            }
            if (enter == total_) {
                // Redundant row; the artificial stays basic at value ~0.
                if (std::fabs(rhs(i)) > 1e-9) return false;
                continue;
            }
            pivot(i, enter);
        }
        return true;
    }

    double phase1_objective() const {
        double obj = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] >= cols_) obj += rhs(i);
        return obj;
    }

    std::vector<double> primal_solution() const {
        std::vector<double> x(cols_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < cols_) x[basis_[i]] = rhs(i);
        return x;
    }

private:
    std::size_t rows_, cols_, total_;
    std::vector<double> tab_;
    std::vector<std::size_t> basis_;

    double& at(std::size_t i, std::size_t j) { return tab_[i * (total_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return tab_[i * (total_ + 1) + j]; }
    double& rhs(std::size_t i) { return tab_[i * (total_ + 1) + total_]; }
    double rhs(std::size_t i) const { return tab_[i * (total_ + 1) + total_]; }

    bool is_basic(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] == j) return true;
        return false;
    }

    std::vector<double> dual_prices(const std::vector<double>& cost) const {
        // Basic columns are unit vectors after pivoting, so y_i is the basic
        // cost of row i.
        std::vector<double> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            y[i] = basis_[i] < cost.size() ? cost[basis_[i]] : 0.0;
        return y;
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        const double pv = at(prow, pcol);
        for (std::size_t j = 0; j <= total_; ++j) at(prow, j) /= pv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == prow) continue;
            const double factor = at(i, pcol);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j <= total_; ++j) at(i, j) -= factor * at(prow, j);
        }
        basis_[prow] = pcol;
    }
};

}  // namespace

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Breakdown: return "breakdown";
    }
    return "?";
}

LpResult simplex_solve(const std::vector<double>& costs,
                       const std::vector<double>& equality_matrix,
                       const std::vector<double>& rhs, LpSense sense) {
    const std::size_t cols = costs.size();
    const std::size_t rows = rhs.size();
    if (cols == 0 || rows == 0 || equality_matrix.size() != rows * cols)
        throw std::invalid_argument("simplex_solve: dimension mismatch");

    Tableau tab(equality_matrix, rhs, rows, cols);

    // Phase I: minimize the sum of artificials.
    std::vector<double> phase1_cost(cols + rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) phase1_cost[cols + i] = 1.0;
    LpStatus st = tab.run(phase1_cost, cols + rows);
    if (st == LpStatus::Breakdown) return {LpStatus::Breakdown, 0.0, {}};
    if (tab.phase1_objective() > 1e-8) return {LpStatus::Infeasible, 0.0, {}};
    if (!tab.eliminate_artificials()) return {LpStatus::Infeasible, 0.0, {}};

    // Phase II on the structural columns only.
    std::vector<double> phase2_cost(cols + rows, 0.0);
    const double flip = sense == LpSense::Maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < cols; ++j) phase2_cost[j] = flip * costs[j];
    st = tab.run(phase2_cost, cols);
    if (st != LpStatus::Optimal) return {st, 0.0, {}};

    LpResult result;
    result.status = LpStatus::Optimal;
    result.solution = tab.primal_solution();
    result.objective = 0.0;
    for (std::size_t j = 0; j < cols; ++j) result.objective += costs[j] * result.solution[j];
    return result;
}

}  // namespace korovkin
