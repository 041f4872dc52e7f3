#ifndef PSPEC_HARNESS_HPP
#define PSPEC_HARNESS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pspec/graph.hpp"
#include "pspec/solver.hpp"

namespace pspec {

struct GraphOutcome {
    std::string graph6;
    double p = 0.0; // 0 on rows aggregated across p
    double lambda = 0.0;
    double margin = 0.0;
    std::string verdict;
};

struct ChainOutcome {
    int r = 0;
    int q = 0;
    double margin = 0.0;
    std::string verdict;
};

/// Outcome of one verification suite. JSON/CSV serializations are sorted and
/// fixed-format so reruns are byte-identical; elapsed time appears only in
/// the human summary line.
struct VerificationReport {
    std::string theorem_id;
    int n = 0;
    int r = 0;
    int t = 0;
    std::vector<double> p_values;
    std::vector<GraphOutcome> rows;
    std::vector<ChainOutcome> chain;
    long total = 0;
    long checked = 0;
    long violations = 0;
    long inconclusive = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    double elapsed_seconds = 0.0;

    bool passed() const { return violations == 0 && inconclusive == 0; }
    std::string to_json() const;
    std::string to_csv() const;
    std::string summary_line() const;
};

struct HarnessOptions {
    int workers = 1;
    SolveOptions solve;
    std::string graph6_file; // optional external corpus, one graph6 per line
};

/// Unique-maximizer reproduction: among K_{r+1}-free graphs of order n the
/// lambda^(p) maximizer must be T_r(n), runner-up margin > 1e-7; borderline
/// cases re-solve at tol 1e-13 with 64 restarts before being called
/// inconclusive.
VerificationReport verify_turan_extremal(int n, int r, double p,
                                         const HarnessOptions& options = {});

/// Clique-number reformulation over all graphs of order n, plus the Turan
/// chain ordering lambda(T_r(n)) > lambda(T_q(n)) for r > q.
VerificationReport verify_clique_reformulation(int n, double p,
                                               const HarnessOptions& options = {});

/// Joint saturation at desk scale: every graph at or above the Turan value
/// other than T_r(n) itself must have js_{r+1} >= 1; graphs meeting the
/// minimum-degree lemma hypotheses must satisfy js_{r+1} > n^(r-1)/r^(r+3).
VerificationReport verify_saturation_desk(int n, int r, double p,
                                          const HarnessOptions& options = {});

/// K_r^+ containment above the Turan value. Containment of the t-pattern is
/// asserted only where the theorems force it at desk scale (r = 2, t = 1);
/// larger patterns are reported, not asserted.
VerificationReport verify_kr_plus_presence(int n, int r, double p, int t,
                                           const HarnessOptions& options = {});

/// Seeded random-graph sweep running every per-graph bound checker at each
/// p, plus the monotonicity chain across the p list.
VerificationReport sweep_bounds(int count, int n_max, std::vector<double> p_list,
                                std::uint64_t seed, const HarnessOptions& options = {});

} // namespace pspec

#endif // PSPEC_HARNESS_HPP
