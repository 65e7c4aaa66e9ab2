#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace korovkin {

/// Compact interval [a,b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b))
            throw std::invalid_argument("Interval: require a < b, got [" +
                                        std::to_string(a) + "," + std::to_string(b) + "]");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }

    bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

/// A real-valued function sampled on m >= 2 uniformly spaced nodes of an
/// interval. Immutable after construction; operations on mismatched grids
/// throw rather than resample.
class GridFunction {
public:
    GridFunction(Interval interval, std::vector<double> values);

    const Interval& interval() const { return interval_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t j) const { return values_[j]; }

    /// j-th grid node t_j = a + j*(b-a)/(m-1).
    double node(std::size_t j) const;
    double spacing() const { return interval_.length() / double(values_.size() - 1); }

    bool combinable_with(const GridFunction& other) const {
        return interval_ == other.interval_ && values_.size() == other.values_.size();
    }

    GridFunction operator+(const GridFunction& g) const;
    GridFunction operator-(const GridFunction& g) const;
    GridFunction operator*(double c) const;
    GridFunction operator-() const { return *this * -1.0; }
    GridFunction abs() const;

    double min_value() const;
    double max_value() const;

private:
    Interval interval_;
    std::vector<double> values_;

    void require_combinable(const GridFunction& g) const;
};

/// Sample a function object on a uniform grid.
template <typename F>
GridFunction sample(Interval interval, std::size_t m, F&& f) {
    if (m < 2) throw std::invalid_argument("sample: need m >= 2 nodes");
    std::vector<double> v(m);
    const double h = interval.length() / double(m - 1);
    for (std::size_t j = 0; j < m; ++j) v[j] = f(interval.a + double(j) * h);
    return GridFunction(interval, std::move(v));
}

/// Monomial t^i sampled on m nodes.
GridFunction make_monomial(Interval interval, std::size_t m, unsigned degree);

/// sup(f,g) = (f+g)/2 + |f-g|/2; equals the nodewise maximum.
GridFunction lattice_sup(const GridFunction& f, const GridFunction& g);

/// inf(f,g) = (f+g)/2 - |f-g|/2; equals the nodewise minimum.
GridFunction lattice_inf(const GridFunction& f, const GridFunction& g);

/// True iff every node value is > 0. Node-level check only; the continuum
/// claim is the caller's responsibility.
bool is_strictly_positive(const GridFunction& f);

/// Nodewise weighted sum sum_i coeffs[i]*fs[i].
GridFunction linear_combination(const std::vector<double>& coeffs,
                                const std::vector<GridFunction>& fs);

/// CSV serialization: header "t,value", one row per node, 17 significant digits.
std::string to_csv(const GridFunction& f);
GridFunction grid_function_from_csv(const std::string& csv);

}  // namespace korovkin
