#include "korovkin/operators.hpp"

#include <cmath>
#include <numeric>

namespace korovkin {
namespace {

// (1 - s^2)^n via exp(n*log1p(-s^2)); short-circuits |s| >= 1 to 0 so large
// n cannot underflow into sign noise.
double window_power(double s, unsigned n) {
    const double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(double(n) * std::log1p(-s2));
}

double kernel_scale(const LandauStieltjesKernel& k) {
    return std::sqrt(double(k.n) / M_PI) / k.interval.length();
}

// Evaluate f at an arbitrary point by linear interpolation between nodes.
double interp_linear(const GridFunction& f, double t) {
    const double a = f.interval().a;
    const double h = f.spacing();
    double pos = (t - a) / h;
    if (pos <= 0.0) return f[0];
    std::size_t j = std::size_t(pos);
    if (j >= f.size() - 1) return f[f.size() - 1];
    double frac = pos - double(j);
    return (1.0 - frac) * f[j] + frac * f[j + 1];
}

// Least squares min ||A c - y|| via Householder QR; A is m x ncols, column-major.
// Returns the residual 2-norm.
double householder_lsq_residual(std::vector<double> A, std::vector<double> y,
                                std::size_t m, std::size_t ncols) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return A[j * m + i]; };
    for (std::size_t col = 0; col < ncols; ++col) {
        double norm = 0.0;
        for (std::size_t i = col; i < m; ++i) norm += at(i, col) * at(i, col);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        double alpha = at(col, col) > 0 ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[col] = at(col, col) - alpha;
        for (std::size_t i = col + 1; i < m; ++i) v[i] = at(i, col);
        double vtv = 0.0;
        for (std::size_t i = col; i < m; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        for (std::size_t j = col; j < ncols; ++j) {
            double dot = 0.0;
            for (std::size_t i = col; i < m; ++i) dot += v[i] * at(i, j);
            double scale = 2.0 * dot / vtv;
            for (std::size_t i = col; i < m; ++i) at(i, j) -= scale * v[i];
        }
        double dot = 0.0;
        for (std::size_t i = col; i < m; ++i) dot += v[i] * y[i];
        double scale = 2.0 * dot / vtv;
        for (std::size_t i = col; i < m; ++i) y[i] -= scale * v[i];
    }
    double res2 = 0.0;
    for (std::size_t i = ncols; i < m; ++i) res2 += y[i] * y[i];
    return std::sqrt(res2);
}

}  // namespace

double kernel_value(const LandauStieltjesKernel& k, double t, double x) {
    const Interval& iv = k.interval;
    if (t < iv.a || t > iv.b || x < iv.a || x > iv.b)
        throw std::invalid_argument("kernel_value: arguments outside the interval");
    const double s = (t - x) / iv.length();
    return kernel_scale(k) * window_power(s, k.n);
}

GridFunction apply_landau_stieltjes(const LandauStieltjesKernel& k, const GridFunction& f) {
    if (!(f.interval() == k.interval))
        throw std::invalid_argument("apply_landau_stieltjes: interval mismatch");
    const std::size_t m = f.size();
    const double h = f.spacing();
    const double scale = kernel_scale(k);
    const double inv_len = 1.0 / k.interval.length();
    std::vector<double> out(m, 0.0);
    for (std::size_t jx = 0; jx < m; ++jx) {
        const double x = f.node(jx);
        double acc = 0.0;
        for (std::size_t jt = 0; jt < m; ++jt) {
            const double w = (jt == 0 || jt == m - 1) ? 0.5 * h : h;
            const double s = (f.node(jt) - x) * inv_len;
            acc += w * window_power(s, k.n) * f[jt];
        }
        out[jx] = scale * acc;
    }
    return GridFunction(f.interval(), std::move(out));
}

double operator_l1_norm(const LandauStieltjesKernel& k, const QuadratureScheme& scheme,
                        std::size_t t_grid_points) {
    const Interval& iv = k.interval;
    auto column_mass = [&](double t) {
        return integrate([&](double x) { return kernel_value(k, t, x); }, iv, scheme);
    };
    double best = column_mass(iv.midpoint());
    const double h = iv.length() / double(t_grid_points - 1);
    for (std::size_t j = 0; j < t_grid_points; ++j)
        best = std::max(best, column_mass(iv.a + double(j) * h));
    return best;
}

GridFunction apply_bernstein(unsigned n, const GridFunction& f) {
    if (!(f.interval() == Interval(0.0, 1.0)))
        throw std::invalid_argument("apply_bernstein: requires the interval [0,1]");
    if (n == 0) throw std::invalid_argument("apply_bernstein: n must be positive");
    std::vector<double> samples(n + 1);
    for (unsigned kk = 0; kk <= n; ++kk)
        samples[kk] = interp_linear(f, double(kk) / double(n));
    std::vector<double> out(f.size());
    for (std::size_t jx = 0; jx < f.size(); ++jx) {
        const double x = f.node(jx);
        if (x <= 0.0) { out[jx] = samples[0]; continue; }
        if (x >= 1.0) { out[jx] = samples[n]; continue; }
        const double lx = std::log(x), l1x = std::log1p(-x);
        double acc = 0.0;
        for (unsigned kk = 0; kk <= n; ++kk) {
            double logw = std::lgamma(double(n) + 1.0) - std::lgamma(double(kk) + 1.0) -
                          std::lgamma(double(n - kk) + 1.0) + double(kk) * lx +
                          double(n - kk) * l1x;
            acc += samples[kk] * std::exp(logw);
        }
        out[jx] = acc;
    }
    return GridFunction(f.interval(), std::move(out));
}

double polynomial_fit_residual(const GridFunction& g, std::size_t degree) {
    const std::size_t m = g.size();
    if (m < degree + 2)
        throw std::invalid_argument("polynomial_fit_residual: insufficient nodes for fit degree");
    const std::size_t ncols = degree + 1;
    // Legendre basis on the interval mapped to [-1,1] keeps the fit well
    // conditioned up to the degrees used here.
    std::vector<double> A(m * ncols);
    const double mid = g.interval().midpoint();
    const double half = 0.5 * g.interval().length();
    for (std::size_t i = 0; i < m; ++i) {
        const double u = (g.node(i) - mid) / half;
        double p0 = 1.0, p1 = u;
        A[0 * m + i] = p0;
        if (ncols > 1) A[1 * m + i] = p1;
        for (std::size_t d = 2; d < ncols; ++d) {
            double p2 = ((2.0 * double(d) - 1.0) * u * p1 - (double(d) - 1.0) * p0) / double(d);
            A[d * m + i] = p2;
            p0 = p1;
            p1 = p2;
        }
    }
    std::vector<double> y(g.values());
    double ynorm = 0.0;
    for (double v : y) ynorm += v * v;
    ynorm = std::sqrt(ynorm);
    if (ynorm == 0.0) return 0.0;
    return householder_lsq_residual(std::move(A), std::move(y), m, ncols) / ynorm;
}

double degree_bound_check(const LandauStieltjesKernel& k, const GridFunction& f) {
    const std::size_t needed = 2 * std::size_t(k.n) + 2;
    if (f.size() < needed)
        throw std::invalid_argument("degree_bound_check: need m >= 2n+2 nodes");
    GridFunction image = apply_landau_stieltjes(k, f);
    return polynomial_fit_residual(image, 2 * std::size_t(k.n));
}

OperatorFamily landau_stieltjes_family(Interval interval) {
    OperatorFamily fam;
    fam.descriptor = "landau-stieltjes[" + std::to_string(interval.a) + "," +
                     std::to_string(interval.b) + "]";
    fam.apply = [interval](unsigned n, const GridFunction& f) {
        return apply_landau_stieltjes(LandauStieltjesKernel(n, interval), f);
    };
    fam.norm_estimate = [interval](unsigned n) {
        return operator_l1_norm(LandauStieltjesKernel(n, interval),
                                QuadratureScheme::gauss(64, 6));
    };
    return fam;
}

OperatorFamily bernstein_family() {
    OperatorFamily fam;
    fam.descriptor = "bernstein[0,1]";
    fam.apply = [](unsigned n, const GridFunction& f) { return apply_bernstein(n, f); };
    fam.norm_estimate = [](unsigned) { return 1.0; };  // B_n 1 = 1, positivity
    return fam;
}

}  // namespace korovkin
