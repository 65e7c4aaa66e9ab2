#include "korovkin/banach_axioms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "korovkin/quadrature.hpp"

namespace korovkin {

bool check_N1(const GridFunction& f, const GridFunction& g, NormKind norm) {
    if (!f.combinable_with(g)) throw std::invalid_argument("check_N1: incompatible grids");
    for (std::size_t j = 0; j < f.size(); ++j)
        if (std::fabs(g[j]) > std::fabs(f[j]) + 1e-15)
            throw std::invalid_argument("check_N1: precondition |g| <= |f| violated");
    return lp_norm(g, norm.p) <= lp_norm(f, norm.p) + 1e-12;
}

bool check_N2_sequence(const std::vector<GridFunction>& increasing,
                       const GridFunction& f, NormKind norm) {
    double prev = 0.0;
    for (const auto& fk : increasing) {
        double nk = lp_norm(fk, norm.p);
        if (nk < prev - 1e-12) return false;
        prev = nk;
    }
    return std::fabs(prev - lp_norm(f, norm.p)) <= 1e-12;
}

bool check_N2(const GridFunction& f, int steps, NormKind norm) {
    if (f.min_value() < 0.0)
        throw std::invalid_argument("check_N2: f must be nonnegative");
    if (steps < 1) throw std::invalid_argument("check_N2: steps must be >= 1");
    const double top = f.max_value();
    std::vector<GridFunction> seq;
    seq.reserve(std::size_t(steps));
    for (int k = 1; k <= steps; ++k) {
        const double cap = top * double(k) / double(steps);
        std::vector<double> v(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) v[j] = std::min(f[j], cap);
        seq.emplace_back(f.interval(), std::move(v));
    }
    return check_N2_sequence(seq, f, norm);
}

double n3_perturbation_shift(const GridFunction& f, NormKind norm, std::size_t node) {
    if (node >= f.size()) throw std::invalid_argument("n3_perturbation_shift: node out of range");
    std::vector<double> v(f.values());
    v[node] += 1.0;
    GridFunction perturbed(f.interval(), std::move(v));
    return std::fabs(lp_norm(perturbed, norm.p) - lp_norm(f, norm.p));
}

bool check_N3(const GridFunction& f, NormKind norm) {
    if (f.size() < 16) throw std::invalid_argument("check_N3: need m >= 16 nodes");
    const std::size_t node = f.size() / 2;  // one interior node
    const double h = f.spacing();
    return n3_perturbation_shift(f, norm, node) <= 2.0 * h;
}

GridFunction step_function(Interval interval, std::size_t m, double jump_at,
                           double low, double high) {
    if (m < 2) throw std::invalid_argument("step_function: need m >= 2");
    const double h = interval.length() / double(m - 1);
    std::size_t jump_node = std::size_t(std::lround((jump_at - interval.a) / h));
    jump_node = std::clamp<std::size_t>(jump_node, 1, m - 2);
    std::vector<double> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = j < jump_node ? low : high;
    return GridFunction(interval, std::move(v));
}

std::vector<double> density_demo(const GridFunction& target, NormKind norm,
                                 const std::vector<double>& widths) {
    for (std::size_t i = 1; i < widths.size(); ++i)
        if (!(widths[i] < widths[i - 1]))
            throw std::invalid_argument("density_demo: widths must be strictly decreasing");

    // Locate the single jump node.
    std::size_t jump = 0;
    for (std::size_t j = 1; j < target.size(); ++j)
        if (target[j] != target[j - 1]) {
            if (jump != 0) throw std::invalid_argument("density_demo: more than one jump");
            jump = j;
        }
    if (jump == 0) throw std::invalid_argument("density_demo: target has no jump");
    const double c = target.node(jump);
    const double lo = target[0];
    const double hi = target[target.size() - 1];

    std::vector<double> errors;
    errors.reserve(widths.size());
    for (double w : widths) {
        auto ramp = [&](double t) {
            if (t <= c - 0.5 * w) return lo;
            if (t >= c + 0.5 * w) return hi;
            return lo + (hi - lo) * (t - (c - 0.5 * w)) / w;
        };
        GridFunction approx = sample(target.interval(), target.size(), ramp);
        errors.push_back(lp_norm(target - approx, norm.p));
    }
    return errors;
}

}  // namespace korovkin
