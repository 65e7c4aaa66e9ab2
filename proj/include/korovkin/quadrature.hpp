#pragma once

#include <cstddef>
#include <functional>

#include "korovkin/grid.hpp"

namespace korovkin {

enum class QuadratureKind { CompositeTrapezoid, CompositeGaussLegendre };

/// Composite quadrature over an interval. Gauss-Legendre supports 2..8
/// nodes per panel; weights are strictly positive and exact on constants.
struct QuadratureScheme {
    QuadratureKind kind;
    std::size_t panels;
    std::size_t nodes_per_panel;  // Gauss only

    static QuadratureScheme trapezoid(std::size_t panels);
    static QuadratureScheme gauss(std::size_t panels, std::size_t nodes_per_panel);
};

/// Quadrature nodes/weights of a scheme on an interval.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule build_rule(const QuadratureScheme& scheme, Interval interval);

/// Integrate an evaluable function with the given scheme.
double integrate(const std::function<double(double)>& f, Interval interval,
                 const QuadratureScheme& scheme);

/// Integrate a grid function with the trapezoid rule on its native grid.
double integrate(const GridFunction& f);

/// (integral of |f|^p)^(1/p), trapezoid on the native grid. Requires p >= 1.
double lp_norm(const GridFunction& f, double p);

/// Grid max of |f|; the informal stand-in for the sup norm.
double sup_norm(const GridFunction& f);

}  // namespace korovkin
