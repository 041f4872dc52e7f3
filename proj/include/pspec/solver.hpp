#ifndef PSPEC_SOLVER_HPP
#define PSPEC_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pspec/graph.hpp"

namespace pspec {

/// Nonnegative weight vector with unit p-norm.
struct WeightVector {
    std::vector<double> entries;
    double p = 2.0;
};

double p_norm(const std::vector<double>& x, double p);

/// Normalizes to unit p-norm; rejects negative entries and all-zero input.
WeightVector make_weight_vector(std::vector<double> entries, double p);

enum class SolveStatus { converged, max_iterations, degenerate_input };

std::string to_string(SolveStatus s);

struct SolveOptions {
    int restarts = 16;
    double tol = 1e-10;
    long max_iter = 100000;
    std::uint64_t seed = 42;
    bool require_positive = false;
};

struct SolveResult {
    double lambda = 0.0;
    WeightVector vector;
    double residual = 0.0;
    long iterations = 0;
    int restarts_used = 0;
    SolveStatus status = SolveStatus::converged;
};

/// 2 * sum over edges of x_i x_j.
double quadratic_form(const Graph& g, const std::vector<double>& x);
double quadratic_form(const Graph& g, const WeightVector& x);

/// max_k | lambda * x_k^(p-1) - sum of x over neighbors of k |, p > 1 only.
double eigen_residual(const Graph& g, const std::vector<double>& x, double lambda, double p);

/// Lower-bound solver for the p-spectral radius, p > 1.
///
/// Each start runs the damped multiplicative fixed-point iteration
///     x <- normalize_p((x .* Ax)^(1/p)),
/// whose fixed points are exactly the eigenequation solutions and whose
/// quadratic form is nondecreasing along the iteration. Starts: uniform,
/// then uniform-on-each-maximal-clique (with a small positive floor off the
/// clique), then seeded random positive vectors, `restarts` in total. The
/// result is the maximum lambda across starts; ties at 12 decimals resolve
/// to the lexicographically largest vector. The returned lambda equals the
/// quadratic form of the returned vector, hence is a certified lower bound.
SolveResult solve_lambda_p(const Graph& g, double p, const SolveOptions& options = {});

/// 1 - 1/clique_number(G); the exact p = 1 value.
double lambda_1_exact(const Graph& g);

/// 2 e(G); the p -> infinity limit.
double lambda_infinity(const Graph& g);

/// Independent grid-plus-refinement maximizer over the simplex in x^p
/// coordinates; n <= 6. Returns a lower bound within O(resolution) of the
/// optimum. Intended as an oracle, not a fast path.
double brute_force_lambda(const Graph& g, double p, double resolution);

/// Flat record {lambda, residual, iterations, restarts_used, status, vector[]}
/// with 17 significant digits.
std::string to_json(const SolveResult& r);

} // namespace pspec

#endif // PSPEC_SOLVER_HPP
