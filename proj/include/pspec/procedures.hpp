#ifndef PSPEC_PROCEDURES_HPP
#define PSPEC_PROCEDURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "pspec/graph.hpp"
#include "pspec/solver.hpp"

namespace pspec {

enum class CheckOutcome { pass, fail, not_applicable };

std::string to_string(CheckOutcome c);

/// Zykov-style symmetrization: returns a complete multipartite graph H on
/// the same vertex set whose weighted degrees against x dominate those of G
/// at every vertex (verified internally). Recursion: pick u maximizing the
/// weighted degree (lowest index on ties), split into U = Gamma(u) and
/// W = V \ U, refine U, keep W as one part.
Graph symmetrize(const Graph& g, const std::vector<double>& x);
Graph symmetrize(const Graph& g, const WeightVector& x);

/// Weighted degree sum of x over the neighbors of v.
double weighted_degree(const Graph& g, const std::vector<double>& x, int v);

/// min_i x_i^p.
double sigma_of(const std::vector<double>& x, double p);

struct LemmaCheck {
    CheckOutcome outcome = CheckOutcome::not_applicable;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

/// Minimum-entry mass bound: under 1 < p <= 2, 0 < gamma < A < 1, R >= 0,
/// n >= 4R/gamma, lambda n^(2/p-1) > An - R/n and delta(G) <= (A-gamma)n,
/// checks sigma <= (1 - gamma/2)/n. A fail signals a solver defect.
LemmaCheck assert_lemma_le0(const Graph& g, double p, double A, double gamma, double R,
                            const SolveResult& solved);

/// Vertex-removal bound: under the same hypotheses (lambda side non-strict),
/// checks lambda(G-u)(n-1)^(2/p-1) >=
///        ((n-2)/(n-1))^(1-(1-1/p)gamma) lambda(G) n^(2/p-1)
/// where u is the minimum-entry vertex of the eigenvector.
LemmaCheck assert_lemma_le1_step(const Graph& g, double p, double A, double gamma, double R,
                                 double lambda_n, double lambda_n_minus_1);

struct ExtractionParams {
    double p = 2.0;
    double A = 0.5;
    double gamma = 0.1;
    double R = 0.0;
};

/// Throws unless p > 1, 0 < 4 gamma < A < 1 and R >= 0.
void validate(const ExtractionParams& params);

struct ExtractionStep {
    int order = 0;
    int removed_vertex = 0; // original label
    double lambda = 0.0;
    double certificate = 0.0; // lambda * order^(2/p-1)
    int min_degree = 0;
    double sigma = 0.0;
    CheckOutcome le0 = CheckOutcome::not_applicable;
    CheckOutcome le1 = CheckOutcome::not_applicable;
    CheckOutcome b1 = CheckOutcome::not_applicable;
    CheckOutcome b2 = CheckOutcome::not_applicable;
};

struct ExtractionTrace {
    ExtractionParams params;
    CheckOutcome param_range = CheckOutcome::not_applicable;
    CheckOutcome n_threshold = CheckOutcome::not_applicable;
    CheckOutcome lambda_hypothesis = CheckOutcome::not_applicable;
    CheckOutcome delta_hypothesis = CheckOutcome::not_applicable;
    bool preconditions_met = false;
    std::vector<ExtractionStep> steps;
    int final_order = 0;
    bool exhausted = false;
    double final_lambda = 0.0; // lambda of H when nonempty
    CheckOutcome b1 = CheckOutcome::not_applicable;
    CheckOutcome b2 = CheckOutcome::not_applicable;
    CheckOutcome c1 = CheckOutcome::not_applicable;
    CheckOutcome c2 = CheckOutcome::not_applicable;
    CheckOutcome c3 = CheckOutcome::not_applicable;
    bool has_original_p = false;
    double original_p = 0.0;
    double original_certificate = 0.0;

    std::string to_json() const;
};

/// Procedure P: while delta(G_i) <= (A - gamma) i, remove the vertex with
/// the minimum eigenvector entry (lowest index on ties). Runs mechanically
/// for any valid parameters and records which theorem guarantees applied.
std::pair<Graph, ExtractionTrace> extract_dense_subgraph(const Graph& g,
                                                         const ExtractionParams& params,
                                                         const SolveOptions& solve = {});

/// p > 2 route: monotonicity justifies running the extraction at p = 2; the
/// trace additionally records the original-p certificate lambda n^(2/p-1).
std::pair<Graph, ExtractionTrace> extract_with_p_reduction(const Graph& g,
                                                           const ExtractionParams& params,
                                                           const SolveOptions& solve = {});

} // namespace pspec

#endif // PSPEC_PROCEDURES_HPP
