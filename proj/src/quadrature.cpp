#include "korovkin/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace korovkin {
namespace {

// Gauss-Legendre nodes/weights on [-1,1] via Newton iteration on P_n.
void gauss_legendre_reference(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * double(j) + 1.0) * z * p2 - double(j) * p3) / (double(j) + 1.0);
            }
            pp = double(n) * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        double p1 = 1.0, p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * double(j) + 1.0) * z * p2 - double(j) * p3) / (double(j) + 1.0);
        }
        pp = double(n) * (z * p1 - p2) / (z * z - 1.0);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace

QuadratureScheme QuadratureScheme::trapezoid(std::size_t panels) {
    if (panels == 0) throw std::invalid_argument("QuadratureScheme: panels must be positive");
    return {QuadratureKind::CompositeTrapezoid, panels, 0};
}

QuadratureScheme QuadratureScheme::gauss(std::size_t panels, std::size_t nodes_per_panel) {
    if (panels == 0) throw std::invalid_argument("QuadratureScheme: panels must be positive");
    if (nodes_per_panel < 2 || nodes_per_panel > 8)
        throw std::invalid_argument("QuadratureScheme: Gauss nodes per panel must be in 2..8");
    return {QuadratureKind::CompositeGaussLegendre, panels, nodes_per_panel};
}

QuadratureRule build_rule(const QuadratureScheme& scheme, Interval interval) {
    if (scheme.panels == 0) throw std::invalid_argument("build_rule: panels must be positive");
    QuadratureRule rule;
    const double panel_width = interval.length() / double(scheme.panels);
    if (scheme.kind == QuadratureKind::CompositeTrapezoid) {
        const std::size_t m = scheme.panels + 1;
        rule.nodes.resize(m);
        rule.weights.assign(m, panel_width);
        for (std::size_t j = 0; j < m; ++j)
            rule.nodes[j] = interval.a + double(j) * panel_width;
        rule.weights.front() = rule.weights.back() = 0.5 * panel_width;
    } else {
        if (scheme.nodes_per_panel < 2 || scheme.nodes_per_panel > 8)
            throw std::invalid_argument("build_rule: Gauss nodes per panel must be in 2..8");
        std::vector<double> xr, wr;
        gauss_legendre_reference(scheme.nodes_per_panel, xr, wr);
        for (std::size_t pnl = 0; pnl < scheme.panels; ++pnl) {
            const double lo = interval.a + double(pnl) * panel_width;
            const double mid = lo + 0.5 * panel_width;
            for (std::size_t q = 0; q < scheme.nodes_per_panel; ++q) {
                rule.nodes.push_back(mid + 0.5 * panel_width * xr[q]);
                rule.weights.push_back(0.5 * panel_width * wr[q]);
            }
        }
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, Interval interval,
                 const QuadratureScheme& scheme) {
    QuadratureRule rule = build_rule(scheme, interval);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[j] * f(rule.nodes[j]);
    return acc;
}

double integrate(const GridFunction& f) {
    const double h = f.spacing();
    double acc = 0.5 * (f[0] + f[f.size() - 1]);
    for (std::size_t j = 1; j + 1 < f.size(); ++j) acc += f[j];
    return acc * h;
}

double lp_norm(const GridFunction& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: require p >= 1");
    const double h = f.spacing();
    auto term = [&](std::size_t j) { return std::pow(std::fabs(f[j]), p); };
    double acc = 0.5 * (term(0) + term(f.size() - 1));
    for (std::size_t j = 1; j + 1 < f.size(); ++j) acc += term(j);
    return std::pow(acc * h, 1.0 / p);
}

double sup_norm(const GridFunction& f) { return f.abs().max_value(); }

}  // namespace korovkin
