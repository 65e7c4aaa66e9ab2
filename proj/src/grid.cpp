#include "korovkin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace korovkin {

GridFunction::GridFunction(Interval interval, std::vector<double> values)
    : interval_(interval), values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("GridFunction: need at least 2 nodes");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("GridFunction: non-finite sample value");
}

double GridFunction::node(std::size_t j) const {
    return interval_.a + double(j) * interval_.length() / double(values_.size() - 1);
}

void GridFunction::require_combinable(const GridFunction& g) const {
    if (!combinable_with(g))
        throw std::invalid_argument("GridFunction: incompatible grids (interval or node count differ)");
}

GridFunction GridFunction::operator+(const GridFunction& g) const {
    require_combinable(g);
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = values_[j] + g.values_[j];
    return GridFunction(interval_, std::move(v));
}

GridFunction GridFunction::operator-(const GridFunction& g) const {
    require_combinable(g);
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = values_[j] - g.values_[j];
    return GridFunction(interval_, std::move(v));
}

GridFunction GridFunction::operator*(double c) const {
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * values_[j];
    return GridFunction(interval_, std::move(v));
}

GridFunction GridFunction::abs() const {
    std::vector<double> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::fabs(values_[j]);
    return GridFunction(interval_, std::move(v));
}

double GridFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

GridFunction make_monomial(Interval interval, std::size_t m, unsigned degree) {
    return sample(interval, m, [degree](double t) { return std::pow(t, double(degree)); });
}

namespace {

struct TwoSum {
    double hi, lo;
};

TwoSum two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// (f+g)/2 +/- |f-g|/2 with compensated summation. The exact value is the
// nodewise max (resp. min), itself a double, so the compensated result is
// exact and sup + inf = f + g holds without rounding.
double half_sum_half_absdiff(double f, double g, int sign) {
    TwoSum h = two_sum(f, g);
    TwoSum d = two_sum(f, -g);
    if (d.hi < 0.0 || (d.hi == 0.0 && d.lo < 0.0)) {
        d.hi = -d.hi;
        d.lo = -d.lo;
    }
    double dh = 0.5 * double(sign) * d.hi;
    double dl = 0.5 * double(sign) * d.lo;
    TwoSum s = two_sum(0.5 * h.hi, dh);
    s.lo += 0.5 * h.lo + dl;
    return two_sum(s.hi, s.lo).hi;
}

GridFunction lemma4_combine(const GridFunction& f, const GridFunction& g, int sign) {
    if (!f.combinable_with(g))
        throw std::invalid_argument("lattice sup/inf: incompatible grids");
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = half_sum_half_absdiff(f[j], g[j], sign);
    return GridFunction(f.interval(), std::move(v));
}

}  // namespace

GridFunction lattice_sup(const GridFunction& f, const GridFunction& g) {
    return lemma4_combine(f, g, +1);
}

GridFunction lattice_inf(const GridFunction& f, const GridFunction& g) {
    return lemma4_combine(f, g, -1);
}

bool is_strictly_positive(const GridFunction& f) { return f.min_value() > 0.0; }

GridFunction linear_combination(const std::vector<double>& coeffs,
                                const std::vector<GridFunction>& fs) {
    if (fs.empty() || coeffs.size() != fs.size())
        throw std::invalid_argument("linear_combination: need matching nonempty coeff/function lists");
    GridFunction acc = fs[0] * coeffs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc + fs[i] * coeffs[i];
    return acc;
}

std::string to_csv(const GridFunction& f) {
    std::ostringstream out;
    out << "t,value\n";
    char buf[64];
    for (std::size_t j = 0; j < f.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.node(j), f[j]);
        out << buf;
    }
    return out.str();
}

GridFunction grid_function_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,value", 0) != 0)
        throw std::invalid_argument("grid_function_from_csv: missing 't,value' header");
    std::vector<double> ts, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("grid_function_from_csv: malformed row '" + line + "'");
        ts.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    if (ts.size() < 2)
        throw std::invalid_argument("grid_function_from_csv: need at least 2 rows");
    return GridFunction(Interval(ts.front(), ts.back()), std::move(vs));
}

}  // namespace korovkin
