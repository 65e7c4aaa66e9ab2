#include "doctest.h"

#include <cmath>
#include <random>

#include "korovkin/operators.hpp"
#include "korovkin/quadrature.hpp"

using namespace korovkin;

namespace {

GridFunction random_function(Interval iv, std::size_t m, std::mt19937_64& rng,
                             double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(m);
    for (auto& x : v) x = dist(rng);
    return GridFunction(iv, std::move(v));
}

double closed_form_norm_bound(unsigned n) {
    // sqrt(n/pi) * 2^(2n+1) (n!)^2 / (2n+1)!
    double log_val = 0.5 * std::log(double(n) / M_PI) + (2.0 * n + 1.0) * std::log(2.0) +
                     2.0 * std::lgamma(n + 1.0) - std::lgamma(2.0 * n + 2.0);
    return std::exp(log_val);
}

}  // namespace

TEST_CASE("closed-form bound itself stays below 1 (oracle sanity)") {
    for (unsigned n = 1; n <= 256; ++n) CHECK(closed_form_norm_bound(n) < 1.0);
}

TEST_CASE("kernel values") {
    LandauStieltjesKernel k1(1, Interval(0, 1));
    CHECK(kernel_value(k1, 0.3, 0.3) == doctest::Approx(std::sqrt(1.0 / M_PI)).epsilon(1e-14));

    LandauStieltjesKernel k7(7, Interval(0, 1));
    CHECK(kernel_value(k7, 1.0, 0.0) == 0.0);  // |t-x| = b-a, base vanishes

    LandauStieltjesKernel k10(10, Interval(0, 1));
    double expected = std::pow(1.0 - 0.04, 10) * std::sqrt(10.0 / M_PI);
    CHECK(kernel_value(k10, 0.7, 0.5) == doctest::Approx(expected).epsilon(1e-13));

    CHECK_THROWS(kernel_value(k10, 1.5, 0.5));
    CHECK_THROWS(kernel_value(k10, 0.5, -0.1));
}

TEST_CASE("kernel nonnegative everywhere, stable at large n") {
    LandauStieltjesKernel k(400, Interval(0, 1));
    for (double t : {0.0, 0.1, 0.5, 0.9, 1.0})
        for (double x : {0.0, 0.25, 0.5, 1.0}) CHECK(kernel_value(k, t, x) >= 0.0);
}

TEST_CASE("apply: zero maps to zero, nonnegative stays nonnegative") {
    Interval iv(0, 1);
    LandauStieltjesKernel k(10, iv);
    GridFunction zero = make_monomial(iv, 65, 0) * 0.0;
    GridFunction out = apply_landau_stieltjes(k, zero);
    for (std::size_t j = 0; j < out.size(); ++j) CHECK(out[j] == 0.0);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        GridFunction f = random_function(iv, 33, rng, 0.0, 2.0);
        GridFunction tf = apply_landau_stieltjes(k, f);
        for (std::size_t j = 0; j < tf.size(); ++j) CHECK(tf[j] >= -1e-12);
        GridFunction bf = apply_bernstein(8, f);
        for (std::size_t j = 0; j < bf.size(); ++j) CHECK(bf[j] >= -1e-12);
    }
}

TEST_CASE("apply pi0 at midpoint matches a high-resolution quadrature oracle") {
    // Reference frozen from the m = 8193 trapezoid evaluation of
    // sqrt(10/pi) * integral over [0,1] of (1-(t-0.5)^2)^10 dt.
    Interval iv(0, 1);
    double oracle = std::sqrt(10.0 / M_PI) *
                    integrate([](double t) { return std::pow(1.0 - (t - 0.5) * (t - 0.5), 10.0); },
                              iv, QuadratureScheme::gauss(1024, 6));
    LandauStieltjesKernel k(10, iv);
    GridFunction tf = apply_landau_stieltjes(k, make_monomial(iv, 4097, 0));
    CHECK(tf[2048] == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("linearity of both families") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    Interval iv(0, 1);
    LandauStieltjesKernel k(6, iv);
    for (int trial = 0; trial < 20; ++trial) {
        GridFunction f = random_function(iv, 65, rng);
        GridFunction g = random_function(iv, 65, rng);
        double a = coeff(rng), b = coeff(rng);
        GridFunction combo = f * a + g * b;

        GridFunction lhs = apply_landau_stieltjes(k, combo);
        GridFunction rhs = apply_landau_stieltjes(k, f) * a + apply_landau_stieltjes(k, g) * b;
        double budget = 1e-10 * (std::fabs(a) * lp_norm(f, 1.0) + std::fabs(b) * lp_norm(g, 1.0));
        CHECK(lp_norm(lhs - rhs, 1.0) <= budget + 1e-14);

        GridFunction bl = apply_bernstein(12, combo);
        GridFunction br = apply_bernstein(12, f) * a + apply_bernstein(12, g) * b;
        CHECK(lp_norm(bl - br, 1.0) <= budget + 1e-14);
    }
}

TEST_CASE("monotonicity: f <= g implies Tf <= Tg") {
    std::mt19937_64 rng(23);
    Interval iv(0, 1);
    LandauStieltjesKernel k(9, iv);
    for (int trial = 0; trial < 20; ++trial) {
        GridFunction f = random_function(iv, 33, rng);
        GridFunction bump = random_function(iv, 33, rng, 0.0, 1.0);
        GridFunction g = f + bump;
        GridFunction tf = apply_landau_stieltjes(k, f);
        GridFunction tg = apply_landau_stieltjes(k, g);
        for (std::size_t j = 0; j < tf.size(); ++j) CHECK(tf[j] <= tg[j] + 1e-12);
    }
}

TEST_CASE("operator norm bounded by the closed form and below 1") {
    auto scheme = QuadratureScheme::gauss(64, 6);
    LandauStieltjesKernel k1(1, Interval(0, 1));
    double norm1 = operator_l1_norm(k1, scheme);
    CHECK(norm1 <= 4.0 / (3.0 * std::sqrt(M_PI)) + 1e-6);

    for (unsigned n : {1u, 2u, 4u, 8u, 16u, 32u, 64u, 128u}) {
        LandauStieltjesKernel k(n, Interval(0, 1));
        double norm = operator_l1_norm(k, scheme);
        CHECK(norm <= 1.0 + 1e-6);
        CHECK(norm <= closed_form_norm_bound(n) + 1e-6);
    }
}

TEST_CASE("operator norm maximizer is the midpoint") {
    LandauStieltjesKernel k(12, Interval(0, 1));
    auto scheme = QuadratureScheme::gauss(64, 6);
    auto mass = [&](double t) {
        return integrate([&](double x) { return kernel_value(k, t, x); }, k.interval, scheme);
    };
    double mid = mass(0.5);
    for (double t : {0.0, 0.2, 0.4, 0.45, 0.6, 0.9}) CHECK(mass(t) <= mid + 1e-12);
    CHECK(operator_l1_norm(k, scheme) == doctest::Approx(mid).epsilon(1e-12));
}

TEST_CASE("bernstein reproduces pi0 and pi1") {
    Interval iv(0, 1);
    GridFunction p0 = make_monomial(iv, 65, 0);
    GridFunction p1 = make_monomial(iv, 65, 1);
    GridFunction b0 = apply_bernstein(10, p0);
    GridFunction b1 = apply_bernstein(10, p1);
    for (std::size_t j = 0; j < 65; ++j) {
        CHECK(std::fabs(b0[j] - p0[j]) <= 1e-12);
        CHECK(std::fabs(b1[j] - p1[j]) <= 1e-12);
    }
}

TEST_CASE("bernstein of pi2 at x=0.5 matches the brute-force binomial sum") {
    // B_10(t^2, 1/2) = 1/4 + (1/4)/10 = 0.275, verified by direct summation.
    double brute = 0.0;
    unsigned n = 10;
    for (unsigned k = 0; k <= n; ++k) {
        double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                std::lgamma(n - k + 1.0));
        brute += (double(k) / n) * (double(k) / n) * binom * std::pow(0.5, double(n));
    }
    CHECK(brute == doctest::Approx(0.275).epsilon(1e-12));

    GridFunction p2 = make_monomial(Interval(0, 1), 1025, 2);
    GridFunction b = apply_bernstein(10, p2);
    CHECK(b[512] == doctest::Approx(0.275).epsilon(1e-6));
    CHECK_THROWS(apply_bernstein(10, make_monomial(Interval(0, 2), 65, 2)));
}

TEST_CASE("degree bound: output fits a degree-2n polynomial") {
    std::mt19937_64 rng(31);
    Interval iv(0, 1);
    GridFunction f = random_function(iv, 64, rng);
    LandauStieltjesKernel k(3, iv);
    CHECK(degree_bound_check(k, f) <= 1e-8);

    // Sanity contrast: degree 2n-1 misses materially.
    GridFunction image = apply_landau_stieltjes(k, f);
    double low_fit = polynomial_fit_residual(image, 2 * 3 - 1);
    CHECK(low_fit > 100.0 * degree_bound_check(k, f));

    GridFunction zero = f * 0.0;
    CHECK(degree_bound_check(k, zero) == 0.0);

    CHECK_THROWS(degree_bound_check(LandauStieltjesKernel(40, iv), f));  // m < 2n+2
}
