#pragma once

#include <functional>
#include <string>

#include "korovkin/grid.hpp"
#include "korovkin/quadrature.hpp"

namespace korovkin {

/// Landau-Stieltjes kernel K_n(t,x) = (1/(b-a)) sqrt(n/pi) (1 - ((t-x)/(b-a))^2)^n
/// on [a,b]; nonnegative for t,x in the interval.
struct LandauStieltjesKernel {
    unsigned n;
    Interval interval;

    LandauStieltjesKernel(unsigned n_, Interval interval_) : n(n_), interval(interval_) {
        if (n == 0) throw std::invalid_argument("LandauStieltjesKernel: n must be positive");
    }
};

double kernel_value(const LandauStieltjesKernel& k, double t, double x);

/// T_n(f,x) = integral of K_n(t,x) f(t) dt, evaluated at the nodes of f.
/// f is known at grid nodes only, so the integral uses the trapezoid rule
/// on the native grid; the scheme argument is accepted for kernel-side
/// integrals where the integrand is analytically evaluable.
GridFunction apply_landau_stieltjes(const LandauStieltjesKernel& k, const GridFunction& f);

/// Estimate of ||T_n||_{L1->L1} = max_t integral of K_n(t,x) dx; the max
/// is taken over a t-grid plus the interval midpoint (the analytic maximizer).
double operator_l1_norm(const LandauStieltjesKernel& k, const QuadratureScheme& scheme,
                        std::size_t t_grid_points = 129);

/// Bernstein operator B_n(f,x) on [0,1]; f(k/n) by linear interpolation
/// between grid nodes.
GridFunction apply_bernstein(unsigned n, const GridFunction& f);

/// Relative least-squares residual of fitting a degree-2n polynomial to
/// T_n f. Requires m >= 2n+2 nodes. Small residual certifies T_n f lies
/// in the polynomials of degree 2n.
double degree_bound_check(const LandauStieltjesKernel& k, const GridFunction& f);

/// Relative residual of a least-squares degree-d polynomial fit to g.
double polynomial_fit_residual(const GridFunction& g, std::size_t degree);

/// A sequence of positive linear operators indexed by n.
struct OperatorFamily {
    std::string descriptor;
    std::function<GridFunction(unsigned n, const GridFunction&)> apply;
    // Optional per-index operator norm estimate; empty when unavailable.
    std::function<double(unsigned n)> norm_estimate;
};

OperatorFamily landau_stieltjes_family(Interval interval);
OperatorFamily bernstein_family();

}  // namespace korovkin
