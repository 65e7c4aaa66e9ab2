#include "korovkin/lattice_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace korovkin {
namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_same_dim(const std::vector<Vec>& vs) {
    for (const auto& v : vs)
        if (v.size() != vs.front().size())
            throw std::invalid_argument("vectors of mixed dimension");
}

bool structurally_hom(const PositiveMap& map) {
    for (std::size_t i = 0; i < map.dim; ++i) {
        int nonzeros = 0;
        for (std::size_t j = 0; j < map.dim; ++j)
            if (map.at(i, j) != 0.0) ++nonzeros;
        if (nonzeros > 1) return false;
    }
    return true;
}

// Random expression in the sublattice generated by the generators: leaves
// are linear combinations, inner nodes sup/inf. Positive parts (sup with
// the zero combination) appear often enough that coordinate peaks are
// reachable by chance.
Vec random_expression(const std::vector<Vec>& generators, Rng& rng, int depth) {
    const std::size_t m = generators.front().size();
    if (depth <= 0) {
        Vec v(m, 0.0);
        for (const auto& g : generators) {
            const double c = rng.uniform(-2.0, 2.0);
            for (std::size_t i = 0; i < m; ++i) v[i] += c * g[i];
        }
        return v;
    }
    Vec left = random_expression(generators, rng, depth - 1);
    Vec right = rng.uniform() < 0.25 ? Vec(m, 0.0)
                                     : random_expression(generators, rng, depth - 1);
    return rng.uniform() < 0.5 ? vec_sup(left, right) : vec_inf(left, right);
}

}  // namespace

Vec vec_sup(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec_sup: dimension mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i], y[i]);
    return r;
}

Vec vec_inf(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec_inf: dimension mismatch");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
    return r;
}

Vec vec_abs(const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::fabs(x[i]);
    return r;
}

double max_norm(const Vec& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

PositiveMap::PositiveMap(std::size_t dim_, std::vector<double> entries_)
    : dim(dim_), entries(std::move(entries_)) {
    if (dim == 0 || entries.size() != dim * dim)
        throw std::invalid_argument("PositiveMap: bad dimensions");
    for (double e : entries)
        if (e < 0.0) throw std::invalid_argument("PositiveMap: negative entry");
}

Vec PositiveMap::apply(const Vec& x) const {
    if (x.size() != dim) throw std::invalid_argument("PositiveMap::apply: dimension mismatch");
    Vec r(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) r[i] += at(i, j) * x[j];
    return r;
}

double PositiveMap::row_sum_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim; ++j) s += at(i, j);
        best = std::max(best, s);
    }
    return best;
}

PositiveMap PositiveMap::identity(std::size_t dim) {
    std::vector<double> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return PositiveMap(dim, std::move(e));
}

LatticeHomCheck is_lattice_hom(const PositiveMap& map, int trials, double tol,
                               std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("is_lattice_hom: trials >= 1 required");
    LatticeHomCheck check{true, std::nullopt};

    if (!structurally_hom(map)) {
        check.is_hom = false;
        // Construct the witness from the first row with two nonzeros.
        for (std::size_t i = 0; i < map.dim; ++i) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < map.dim; ++j)
                if (map.at(i, j) != 0.0) cols.push_back(j);
            if (cols.size() < 2) continue;
            Vec x(map.dim, 0.0), y(map.dim, 0.0);
            x[cols[0]] = 1.0;
            x[cols[1]] = -1.0;
            y[cols[0]] = -1.0;
            y[cols[1]] = 1.0;
            check.witness = {x, y};
            break;
        }
        return check;
    }

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Vec x(map.dim), y(map.dim);
        for (std::size_t i = 0; i < map.dim; ++i) {
            x[i] = rng.uniform(-1.0, 1.0);
            y[i] = rng.uniform(-1.0, 1.0);
        }
        Vec lhs = map.apply(vec_sup(x, y));
        Vec rhs = vec_sup(map.apply(x), map.apply(y));
        for (std::size_t i = 0; i < map.dim; ++i)
            if (std::fabs(lhs[i] - rhs[i]) > tol) {
                check.is_hom = false;
                check.witness = {x, y};
                return check;
            }
    }
    return check;
}

QuasiInteriorPoint quasi_interior_point(const std::vector<Vec>& generators) {
    if (generators.empty())
        throw std::invalid_argument("quasi_interior_point: empty generator list");
    require_same_dim(generators);
    Vec u(generators.front().size(), 0.0);
    for (const auto& g : generators)
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += std::fabs(g[i]);
    bool strict = true;
    for (double v : u) strict = strict && v > 0.0;
    return {u, strict};
}

std::vector<Vec> korovkin_test_set(const std::vector<Vec>& generators) {
    if (generators.empty())
        throw std::invalid_argument("korovkin_test_set: empty generator list");
    require_same_dim(generators);
    std::vector<Vec> set;
    auto push_unique = [&](const Vec& v) {
        for (const auto& w : set)
            if (w == v) return;
        set.push_back(v);
    };
    push_unique(quasi_interior_point(generators).u);
    for (const auto& g : generators) push_unique(g);
    for (const auto& g : generators) {
        Vec sq(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) sq[i] = g[i] * g[i];
        push_unique(sq);
    }
    return set;
}

std::vector<Vec> sample_generated_sublattice(const std::vector<Vec>& generators,
                                             std::size_t count, std::uint64_t seed,
                                             int max_depth) {
    if (generators.empty() || count == 0)
        throw std::invalid_argument("sample_generated_sublattice: empty input");
    require_same_dim(generators);
    Rng rng(seed);
    std::vector<Vec> samples;
    samples.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        int depth = int(rng.index(std::uint64_t(max_depth) + 1));
        samples.push_back(random_expression(generators, rng, depth));
    }
    return samples;
}

Theorem7Report verify_theorem7(const std::vector<Vec>& generators,
                               const std::vector<PositiveMap>& maps,
                               const PositiveMap& lattice_hom, std::size_t samples,
                               const std::vector<double>& tol_schedule,
                               std::uint64_t seed) {
    if (maps.empty()) throw std::invalid_argument("verify_theorem7: empty map sequence");
    for (std::size_t i = 1; i < tol_schedule.size(); ++i)
        if (!(tol_schedule[i] < tol_schedule[i - 1]))
            throw std::invalid_argument("verify_theorem7: tol_schedule must be decreasing");
    if (!structurally_hom(lattice_hom))
        throw std::invalid_argument("verify_theorem7: P is not a lattice homomorphism");

    Theorem7Report report;
    report.test_set = korovkin_test_set(generators);
    QuasiInteriorPoint qip = quasi_interior_point(generators);

    for (const auto& m : maps)
        report.equicontinuity_bound = std::max(report.equicontinuity_bound, m.row_sum_norm());

    std::vector<Vec> sampled = sample_generated_sublattice(generators, samples, seed);

    // Propagation constant: sampled elements are dominated by
    // (||v|| / min u) * u when u is strictly positive.
    double u_min = *std::min_element(qip.u.begin(), qip.u.end());
    double c = 1.0;
    if (qip.quasi_interior) {
        for (const auto& v : sampled) c = std::max(c, max_norm(v) / u_min);
    } else {
        c = 1e6;  // no domination available; keep the harness falsification-only
    }
    report.propagation_constant = c;

    auto error_of = [&](const PositiveMap& t, const Vec& v) {
        Vec tv = t.apply(v);
        Vec pv = lattice_hom.apply(v);
        double e = 0.0;
        for (std::size_t i = 0; i < tv.size(); ++i) e = std::max(e, std::fabs(tv[i] - pv[i]));
        return e;
    };

    report.pass = true;
    for (double tol : tol_schedule) {
        for (std::size_t n = 0; n < maps.size(); ++n) {
            double test_err = 0.0;
            for (const auto& v : report.test_set)
                test_err = std::max(test_err, error_of(maps[n], v));
            if (test_err > tol) continue;  // this level not yet reached at index n
            for (const auto& v : sampled) {
                if (error_of(maps[n], v) > c * tol) {
                    report.pass = false;
                    report.witness = v;
                    report.detail = "sample exceeds " + fmt17(c) + " * " + fmt17(tol) +
                                    " at map index " + std::to_string(n);
                    return report;
                }
            }
            break;  // level satisfied at the first qualifying index
        }
    }
    report.detail = "no counterexample found";
    return report;
}

std::vector<CampaignTrial> run_lattice_campaign(std::size_t trials, std::size_t max_dim,
                                                std::size_t max_generators,
                                                std::uint64_t seed) {
    if (max_dim < 2) throw std::invalid_argument("run_lattice_campaign: max_dim >= 2");
    std::vector<CampaignTrial> results;
    results.reserve(trials);
    Rng master(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = master.raw();
        Rng rng(trial_seed);
        const std::size_t m = 2 + rng.index(max_dim - 1);
        const std::size_t k = 1 + rng.index(max_generators);

        std::vector<Vec> generators(k, Vec(m));
        for (auto& g : generators)
            for (auto& v : g) v = rng.uniform(0.2, 2.0);  // strictly positive

        // Random lattice hom: one nonzero per row.
        std::vector<double> pm(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            pm[i * m + rng.index(m)] = rng.uniform(0.1, 2.0);
        PositiveMap P(m, std::move(pm));

        std::vector<PositiveMap> maps;
        double first_err = 0.0;
        for (unsigned n : {1u, 2u, 4u, 8u, 16u, 32u}) {
            std::vector<double> e(P.entries);
            for (std::size_t i = 0; i < m * m; ++i) e[i] += rng.uniform() / double(n);
            maps.emplace_back(m, std::move(e));
        }
        // Tolerance levels scaled off the first map's test-set error.
        std::vector<Vec> ts = korovkin_test_set(generators);
        for (const auto& v : ts) {
            Vec d = maps[0].apply(v);
            Vec pv = P.apply(v);
            for (std::size_t i = 0; i < m; ++i)
                first_err = std::max(first_err, std::fabs(d[i] - pv[i]));
        }
        if (first_err <= 0.0) first_err = 1.0;
        std::vector<double> tol_schedule = {0.5 * first_err, 0.1 * first_err,
                                            0.02 * first_err};

        Theorem7Report rep =
            verify_theorem7(generators, maps, P, 50, tol_schedule, rng.raw());

        double worst = 0.0;
        for (const auto& v : rep.test_set) {
            Vec d = maps.back().apply(v);
            Vec pv = P.apply(v);
            for (std::size_t i = 0; i < m; ++i)
                worst = std::max(worst, std::fabs(d[i] - pv[i]));
        }
        results.push_back({trial_seed, m, k, rep.test_set.size(), rep.pass, worst});
    }
    return results;
}

std::string campaign_csv(const std::vector<CampaignTrial>& trials) {
    std::ostringstream out;
    out << "trial,seed,m,k,testset_size,verdict,worst_error\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& t = trials[i];
        out << i << ',' << t.seed << ',' << t.dim << ',' << t.generators << ','
            << t.testset_size << ',' << (t.pass ? "PASS" : "FAIL") << ','
            << fmt17(t.worst_error) << '\n';
    }
    return out.str();
}

}  // namespace korovkin
