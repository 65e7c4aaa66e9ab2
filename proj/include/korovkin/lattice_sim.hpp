#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "korovkin/rng.hpp"

namespace korovkin {

using Vec = std::vector<double>;

Vec vec_sup(const Vec& x, const Vec& y);
Vec vec_inf(const Vec& x, const Vec& y);
Vec vec_abs(const Vec& x);
double max_norm(const Vec& x);

/// Nonnegative m x m matrix acting as a positive linear map on R^m with
/// componentwise order.
struct PositiveMap {
    std::size_t dim;
    std::vector<double> entries;  // row-major

    PositiveMap(std::size_t dim_, std::vector<double> entries_);

    double at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    Vec apply(const Vec& x) const;
    /// Max row sum; the operator norm for the max norm on R^m.
    double row_sum_norm() const;

    static PositiveMap identity(std::size_t dim);
};

struct LatticeHomCheck {
    bool is_hom;
    std::optional<std::pair<Vec, Vec>> witness;  // pair breaking sup-commutation
};

/// A nonnegative matrix commutes with sup exactly when each row has at most
/// one nonzero entry. Checks the structural condition and confirms
/// P(sup(x,y)) = sup(Px,Py) on random pairs; on a structural failure the
/// witness pair exercising two nonzeros in one row is returned.
LatticeHomCheck is_lattice_hom(const PositiveMap& map, int trials, double tol,
                               std::uint64_t seed = 1);

/// u = sum of |u_i| componentwise plus the quasi-interior flag (all
/// components strictly positive).
struct QuasiInteriorPoint {
    Vec u;
    bool quasi_interior;
};

QuasiInteriorPoint quasi_interior_point(const std::vector<Vec>& generators);

/// {u} union {u_i} union {u_i squared componentwise}, deduplicated;
/// size <= 2k+1 for k generators.
std::vector<Vec> korovkin_test_set(const std::vector<Vec>& generators);

/// Random elements of the sublattice generated by the generators, built as
/// nested sup/inf of random linear combinations. Deterministic per seed.
std::vector<Vec> sample_generated_sublattice(const std::vector<Vec>& generators,
                                             std::size_t count, std::uint64_t seed,
                                             int max_depth = 3);

struct Theorem7Report {
    bool pass;
    double equicontinuity_bound = 0.0;       // max row-sum norm over the maps
    double propagation_constant = 0.0;       // worst sample-error / tol ratio constant
    std::vector<Vec> test_set;
    std::optional<Vec> witness;              // sampled element breaking propagation
    std::string detail;
};

/// Measures (T_n - P)v on the (2k+1)-element test set and on sampled
/// sublattice elements; PASS when every tolerance level reached on the test
/// set is reached (up to a reported constant) on the samples at the same n.
Theorem7Report verify_theorem7(const std::vector<Vec>& generators,
                               const std::vector<PositiveMap>& maps,
                               const PositiveMap& lattice_hom, std::size_t samples,
                               const std::vector<double>& tol_schedule,
                               std::uint64_t seed);

struct CampaignTrial {
    std::uint64_t seed;
    std::size_t dim;
    std::size_t generators;
    std::size_t testset_size;
    bool pass;
    double worst_error;
};

/// Randomized falsification campaign: strictly positive random generators,
/// random lattice homs P, maps T_n = P + (1/n) * random positive
/// perturbation. Fully determined by the seed.
std::vector<CampaignTrial> run_lattice_campaign(std::size_t trials, std::size_t max_dim,
                                                std::size_t max_generators,
                                                std::uint64_t seed);

std::string campaign_csv(const std::vector<CampaignTrial>& trials);

}  // namespace korovkin
