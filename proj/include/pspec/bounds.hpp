#ifndef PSPEC_BOUNDS_HPP
#define PSPEC_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pspec/graph.hpp"

namespace pspec {

inline constexpr double slack_tolerance = 1e-9;

struct BoundContext {
    std::string graph;
    int n = 0;
    int r = 0; // r or omega, whichever the bound uses
    double p = 0.0;
};

/// One checked inequality. Reports are oriented so that pass means
/// slack >= -tolerance, with slack = rhs - lhs; two-sided brackets store the
/// measured value in lhs and the binding side's slack.
struct BoundReport {
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
    bool equality = false;
    BoundContext context;
};

/// lambda <= (n-1) / n^(2/p-1).
BoundReport check_absolute_max(int n, double p, double lambda);

/// lambda <= (2e)^(1-1/p).
BoundReport check_edge_upper(long long e, double p, double lambda);

/// lambda >= 2e * n^(-2/p).
BoundReport check_uniform_lower(long long e, int n, double p, double lambda);

/// lambda(q) n^(2/q) >= lambda(p) n^(2/p) for q < p, one report per
/// consecutive pair after sorting by p; tolerance 1e-8.
std::vector<BoundReport> check_monotone_in_p(std::vector<std::pair<double, double>> p_lambda,
                                             int n);

/// For a K_{r+1}-free graph (caller certifies):
///   in0: lambda <= (1-1/r)^(1/p) (2e)^(1-1/p)
///   in1: lambda <= (1-1/r) n^(2-2/p), equality flagged at 1e-9.
std::pair<BoundReport, BoundReport> check_clique_bounds(double lambda, long long e, int n,
                                                        int r, double p);

/// e(T_r(n)) in exact integer arithmetic.
long long turan_edges_exact(int r, int n);

/// 2 e(T_r(n)) >= (1-1/r) n^2 - r/4, decided in exact quarter-integers.
BoundReport check_turan_edge_lower(int r, int n);

/// Constructed e(T_r(n)) against the closed form binom(r,2)(n^2-t^2)/r^2 +
/// binom(t,2); an identity, so pass means equality.
BoundReport check_turan_edge_formula(int r, int n);

struct TuranBracketReports {
    std::optional<BoundReport> le; // p > 1 only
    std::optional<BoundReport> lv; // p > 1 only
    std::optional<BoundReport> l1; // p = 1 only
};

/// Brackets for lambda = lambda^(p)(T_r(n)):
///   le: 2e(T)  <=  lambda n^(2/p)  <=  2e(T) (1 + r/(p n^2))
///   lv: (1-1/r)n^2 - r/4  <=  lambda n^(2/p)  <=  (1-1/r)n^2
///   l1: lambda = 1 - 1/r at p = 1.
TuranBracketReports check_turan_lambda_brackets(int r, int n, double p, double lambda);

/// 2 sum_{ij in E} x_i x_j <= 1 - 1/r for simplex weights on a
/// K_{r+1}-free graph (caller certifies the freeness).
BoundReport motzkin_straus_check(const Graph& g, const std::vector<double>& weights, int r);

std::string bound_csv_header();
std::string to_csv_row(const BoundReport& report);

} // namespace pspec

#endif // PSPEC_BOUNDS_HPP
