#pragma once

#include <string>
#include <vector>

#include "korovkin/grid.hpp"
#include "korovkin/moments.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

enum class DecayVerdict { Pass, Fail, InsufficientData };

const char* to_string(DecayVerdict v);

struct ErrorCurve {
    std::string target_name;
    std::vector<double> errors;  // one per schedule entry, ||T_n f - f||_p
    DecayVerdict verdict;
};

struct ConvergenceReport {
    std::string family;
    std::vector<unsigned> schedule;
    double p = 1.0;
    std::vector<double> operator_norms;       // per schedule entry, empty if unavailable
    double norm_bound = 0.0;                  // max over schedule
    bool korovkin_hypothesis_checked = false;
    bool korovkin_verdict = false;
    std::vector<ErrorCurve> test_set_curves;  // per member of S
    std::vector<ErrorCurve> target_curves;

    bool all_pass() const;
    /// Byte-stable CSV body: target,n,error,p,family.
    std::string errors_csv() const;
    /// Byte-stable CSV body: n,operator_norm.
    std::string norms_csv() const;
    std::string summary_line() const;
};

/// Decay classification of one error curve: Pass when the last error is at
/// most 0.75x the first and the curve is nonincreasing up to a 10% ripple;
/// schedules shorter than 2 report InsufficientData.
DecayVerdict classify_decay(const std::vector<double>& errors);

struct NamedFunction {
    std::string name;
    GridFunction fn;
};

/// Verify the convergence-theorem hypotheses (uniform norm bound, decay on
/// the test set, Korovkin-set verification), then measure convergence on
/// the given targets across the n-schedule.
ConvergenceReport run_satz5(const OperatorFamily& family,
                            const std::vector<NamedFunction>& test_set,
                            const std::vector<NamedFunction>& targets,
                            const std::vector<unsigned>& schedule, double p,
                            bool verify_test_set = true);

/// The canned Landau-Stieltjes reproduction: S = {monomials 0..2}, targets
/// {|t - c| with c at one third of the interval, sampled exp, one-jump step}.
ConvergenceReport run_beispiel6(Interval interval, std::size_t m,
                                const std::vector<unsigned>& schedule);

struct ShadowImplicationResult {
    bool no_counterexample;            // every confirmed member also decays
    std::size_t members_checked = 0;
    std::vector<std::string> failures; // member names that broke the implication
    double determined_fraction = 0.0;
};

/// Falsification harness for the shadow inclusion: members of the computed
/// extension space must exhibit the decay verdict under the family. Can
/// refute an implementation, never prove the theorem.
ShadowImplicationResult check_satzB_implication(const OperatorFamily& family,
                                                const std::vector<NamedFunction>& test_set,
                                                const std::vector<NamedFunction>& candidates,
                                                const std::vector<unsigned>& schedule,
                                                double p, double tol = 1e-8);

}  // namespace korovkin
