#include "korovkin/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "korovkin/quadrature.hpp"

namespace korovkin {
namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_schedule(const std::vector<unsigned>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("schedule must be strictly increasing");
}

ErrorCurve measure_curve(const OperatorFamily& family, const NamedFunction& target,
                         const std::vector<unsigned>& schedule, double p) {
    ErrorCurve curve;
    curve.target_name = target.name;
    curve.errors.reserve(schedule.size());
    for (unsigned n : schedule) {
        GridFunction image = family.apply(n, target.fn);
        curve.errors.push_back(lp_norm(image - target.fn, p));
    }
    curve.verdict = classify_decay(curve.errors);
    return curve;
}

}  // namespace

const char* to_string(DecayVerdict v) {
    switch (v) {
        case DecayVerdict::Pass: return "PASS";
        case DecayVerdict::Fail: return "FAIL";
        case DecayVerdict::InsufficientData: return "INSUFFICIENT";
    }
    return "?";
}

DecayVerdict classify_decay(const std::vector<double>& errors) {
    if (errors.size() < 2) return DecayVerdict::InsufficientData;
    if (errors.back() <= 1e-12) return DecayVerdict::Pass;  // at rounding noise
    if (!(errors.back() <= 0.75 * errors.front())) return DecayVerdict::Fail;
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (errors[i] > 1.10 * errors[i - 1]) return DecayVerdict::Fail;
    return DecayVerdict::Pass;
}

bool ConvergenceReport::all_pass() const {
    for (const auto& c : test_set_curves)
        if (c.verdict != DecayVerdict::Pass) return false;
    for (const auto& c : target_curves)
        if (c.verdict != DecayVerdict::Pass) return false;
    return !test_set_curves.empty() || !target_curves.empty();
}

std::string ConvergenceReport::errors_csv() const {
    std::ostringstream out;
    out << "target,n,error,p,family\n";
    auto emit = [&](const ErrorCurve& c) {
        for (std::size_t i = 0; i < schedule.size(); ++i)
            out << c.target_name << ',' << schedule[i] << ',' << fmt17(c.errors[i]) << ','
                << fmt17(p) << ',' << family << '\n';
    };
    for (const auto& c : test_set_curves) emit(c);
    for (const auto& c : target_curves) emit(c);
    return out.str();
}

std::string ConvergenceReport::norms_csv() const {
    std::ostringstream out;
    out << "n,operator_norm\n";
    for (std::size_t i = 0; i < operator_norms.size(); ++i)
        out << schedule[i] << ',' << fmt17(operator_norms[i]) << '\n';
    return out.str();
}

std::string ConvergenceReport::summary_line() const {
    bool insufficient = false;
    for (const auto& c : test_set_curves)
        insufficient |= c.verdict == DecayVerdict::InsufficientData;
    for (const auto& c : target_curves)
        insufficient |= c.verdict == DecayVerdict::InsufficientData;
    if (insufficient) return "verdict: INSUFFICIENT";
    return all_pass() ? "verdict: PASS" : "verdict: FAIL";
}

ConvergenceReport run_satz5(const OperatorFamily& family,
                            const std::vector<NamedFunction>& test_set,
                            const std::vector<NamedFunction>& targets,
                            const std::vector<unsigned>& schedule, double p,
                            bool verify_test_set) {
    require_schedule(schedule);
    if (test_set.empty()) throw std::invalid_argument("run_satz5: empty test set");

    ConvergenceReport report;
    report.family = family.descriptor;
    report.schedule = schedule;
    report.p = p;

    if (verify_test_set) {
        std::vector<GridFunction> fns;
        for (const auto& nf : test_set) fns.push_back(nf.fn);
        KorovkinReport kr = verify_korovkin_set(fns);
        report.korovkin_hypothesis_checked = true;
        report.korovkin_verdict = kr.verdict;
    }

    if (family.norm_estimate) {
        for (unsigned n : schedule) report.operator_norms.push_back(family.norm_estimate(n));
        report.norm_bound =
            *std::max_element(report.operator_norms.begin(), report.operator_norms.end());
    }

    for (const auto& nf : test_set)
        report.test_set_curves.push_back(measure_curve(family, nf, schedule, p));
    for (const auto& nf : targets)
        report.target_curves.push_back(measure_curve(family, nf, schedule, p));
    return report;
}

ConvergenceReport run_beispiel6(Interval interval, std::size_t m,
                                const std::vector<unsigned>& schedule) {
    std::vector<NamedFunction> test_set;
    for (unsigned i = 0; i <= 2; ++i)
        test_set.push_back({"pi" + std::to_string(i), make_monomial(interval, m, i)});

    const double c = interval.a + interval.length() / 3.0;
    std::vector<NamedFunction> targets;
    targets.push_back({"abs_t_minus_third",
                       sample(interval, m, [c](double t) { return std::fabs(t - c); })});
    targets.push_back({"exp", sample(interval, m, [](double t) { return std::exp(t); })});
    std::vector<double> step(m);
    for (std::size_t j = 0; j < m; ++j) step[j] = j < m / 2 ? 0.0 : 1.0;
    targets.push_back({"step", GridFunction(interval, std::move(step))});

    return run_satz5(landau_stieltjes_family(interval), test_set, targets, schedule, 1.0);
}

ShadowImplicationResult check_satzB_implication(const OperatorFamily& family,
                                                const std::vector<NamedFunction>& test_set,
                                                const std::vector<NamedFunction>& candidates,
                                                const std::vector<unsigned>& schedule,
                                                double p, double tol) {
    require_schedule(schedule);
    std::vector<GridFunction> basis;
    for (const auto& nf : test_set) basis.push_back(nf.fn);
    KorovkinReport kr = verify_korovkin_set(basis, tol);

    ShadowImplicationResult result;
    result.determined_fraction = double(kr.determined_points) / double(kr.grid_points);
    result.no_counterexample = true;
    for (const auto& cand : candidates) {
        if (!extension_space_contains(basis, cand.fn, tol)) continue;  // premise fails: vacuous
        ++result.members_checked;
        ErrorCurve curve = measure_curve(family, cand, schedule, p);
        if (curve.verdict != DecayVerdict::Pass) {
            result.no_counterexample = false;
            result.failures.push_back(cand.name);
        }
    }
    return result;
}

}  // namespace korovkin
