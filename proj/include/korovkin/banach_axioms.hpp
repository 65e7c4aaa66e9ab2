#pragma once

#include <vector>

#include "korovkin/grid.hpp"

namespace korovkin {

/// Which Banach-function-space norm the axiom checks run against. Only the
/// Lp family is instantiated.
struct NormKind {
    double p;

    explicit NormKind(double p_) : p(p_) {
        if (p < 1.0) throw std::invalid_argument("NormKind: require p >= 1");
    }
};

/// Solidity: given |g| <= |f| nodewise, the norm of g must not exceed the
/// norm of f. A precondition violation throws; an axiom failure returns false.
bool check_N1(const GridFunction& f, const GridFunction& g, NormKind norm);

/// Monotone convergence: the canonical capped sequence f_k = min(f, k*max(f)/steps)
/// must have nondecreasing norms ending at the norm of f. Requires f >= 0.
bool check_N2(const GridFunction& f, int steps, NormKind norm);

/// Variant entry point: caller-supplied nondecreasing sequence ending at f.
bool check_N2_sequence(const std::vector<GridFunction>& increasing,
                       const GridFunction& f, NormKind norm);

/// Grid analogue of almost-everywhere invariance: perturbing one interior
/// node by +1 shifts the norm by at most 2h, h the grid spacing. Requires
/// m >= 16. The bound tightens linearly under refinement.
bool check_N3(const GridFunction& f, NormKind norm);

/// Norm shift produced by the single-node +1 perturbation (exposed so the
/// refinement law can be measured directly).
double n3_perturbation_shift(const GridFunction& f, NormKind norm, std::size_t node);

/// Step function with a single jump from low to high at the node nearest
/// jump_at (values: low strictly before the jump node, high from it on).
GridFunction step_function(Interval interval, std::size_t m, double jump_at,
                           double low, double high);

/// Continuous-density demonstration: approximate a one-jump step by ramps
/// of the given widths and return the Lp distances, one per width. The
/// widths must be strictly decreasing; the errors decrease ~ w^(1/p).
std::vector<double> density_demo(const GridFunction& target, NormKind norm,
                                 const std::vector<double>& widths);

}  // namespace korovkin
