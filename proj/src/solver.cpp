#include "pspec/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "pspec/cliques.hpp"
#include "pspec/format.hpp"

namespace pspec {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double round12(double v) { return std::round(v * 1e12) / 1e12; }

struct RunOutcome {
    double lambda = 0.0;
    std::vector<double> x;
    double residual = 0.0;
    long iterations = 0;
    bool converged = false;
};

void neighbor_sums(const Graph& g, const std::vector<double>& x, std::vector<double>& s) {
    const int n = g.order();
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        std::uint64_t m = g.neighbor_mask(k);
        while (m) {
            acc += x[static_cast<std::size_t>(std::countr_zero(m))];
            m &= m - 1;
        }
        s[static_cast<std::size_t>(k)] = acc;
    }
}

RunOutcome run_start(const Graph& g, double p, std::vector<double> x, double tol,
                     long max_iter) {
    const int n = g.order();
    std::vector<double> s(static_cast<std::size_t>(n));
    RunOutcome out;
    for (long it = 1;; ++it) {
        neighbor_sums(g, x, s);
        double lam = 0.0;
        for (int k = 0; k < n; ++k)
            lam += x[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)];
        double resid = 0.0;
        for (int k = 0; k < n; ++k) {
            double defect = std::fabs(lam * std::pow(x[static_cast<std::size_t>(k)], p - 1.0) -
                                      s[static_cast<std::size_t>(k)]);
            resid = std::max(resid, defect);
        }
        out.lambda = lam;
        out.residual = resid;
        out.iterations = it;
        if (resid <= tol * std::max(1.0, lam)) {
            out.converged = true;
            out.x = std::move(x);
            return out;
        }
        if (it >= max_iter || lam <= 0.0) {
            out.x = std::move(x);
            return out;
        }
        // x <- normalize_p((x .* Ax)^(1/p)); dividing by lam keeps the p-norm
        // at one since sum(x .* Ax) equals lam
        for (int k = 0; k < n; ++k) {
            double z = x[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)] / lam;
            x[static_cast<std::size_t>(k)] = z > 0.0 ? std::pow(z, 1.0 / p) : 0.0;
        }
        double norm = p_norm(x, p);
        if (norm > 0.0)
            for (auto& v : x)
                v /= norm;
    }
}

// larger-lambda-first, then lexicographically largest vector, both rounded
// to 12 decimals
bool better_outcome(const RunOutcome& a, const RunOutcome& b) {
    double la = round12(a.lambda), lb = round12(b.lambda);
    if (la != lb)
        return la > lb;
    for (std::size_t k = 0; k < a.x.size(); ++k) {
        double xa = round12(a.x[k]), xb = round12(b.x[k]);
        if (xa != xb)
            return xa > xb;
    }
    return false;
}

void certify_closed_form_bounds(const Graph& g, double p, double lambda) {
    const double n = g.order();
    const double e2 = 2.0 * edge_count(g);
    const double eps = 1e-9;
    double abs_max = (n - 1.0) * std::pow(n, 1.0 - 2.0 / p);
    if (lambda > abs_max + eps * std::max(1.0, abs_max))
        throw std::logic_error("solver exceeded the order bound on lambda");
    double edge_upper = std::pow(e2, 1.0 - 1.0 / p);
    if (lambda > edge_upper + eps * std::max(1.0, edge_upper))
        throw std::logic_error("solver exceeded the edge bound on lambda");
    double uniform_lower = e2 * std::pow(n, -2.0 / p);
    if (lambda < uniform_lower - eps * std::max(1.0, uniform_lower))
        throw std::logic_error("solver fell below the uniform-vector bound");
}

} // namespace

double p_norm(const std::vector<double>& x, double p) {
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::fabs(v));
    if (m == 0.0)
        return 0.0;
    double acc = 0.0;
    for (double v : x)
        acc += std::pow(std::fabs(v) / m, p);
    return m * std::pow(acc, 1.0 / p);
}

WeightVector make_weight_vector(std::vector<double> entries, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("weight vector exponent must be >= 1");
    for (double v : entries)
        if (v < 0.0)
            throw std::invalid_argument("weight vector entries must be nonnegative");
    double norm = p_norm(entries, p);
    if (norm == 0.0)
        throw std::invalid_argument("weight vector must not be identically zero");
    for (auto& v : entries)
        v /= norm;
    return WeightVector{std::move(entries), p};
}

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iterations: return "max-iterations";
    case SolveStatus::degenerate_input: return "degenerate-input";
    }
    return "unknown";
}

double quadratic_form(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("vector length does not match graph order");
    double acc = 0.0;
    for (auto [u, v] : g.edges())
        acc += x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(v)];
    return 2.0 * acc;
}

double quadratic_form(const Graph& g, const WeightVector& x) {
    return quadratic_form(g, x.entries);
}

double eigen_residual(const Graph& g, const std::vector<double>& x, double lambda, double p) {
    if (!(p > 1.0))
        throw std::invalid_argument("eigen_residual requires p > 1");
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("vector length does not match graph order");
    for (double v : x)
        if (v < 0.0)
            throw std::invalid_argument("eigen_residual requires a nonnegative vector");
    double resid = 0.0;
    for (int k = 0; k < g.order(); ++k) {
        double s = 0.0;
        for (int i : neighbors(g, k))
            s += x[static_cast<std::size_t>(i)];
        resid = std::max(resid, std::fabs(lambda * std::pow(x[static_cast<std::size_t>(k)], p - 1.0) - s));
    }
    return resid;
}

SolveResult solve_lambda_p(const Graph& g, double p, const SolveOptions& options) {
    if (!(p > 1.0))
        throw std::invalid_argument("solve_lambda_p requires p > 1");
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("solve_lambda_p requires at least one vertex");

    SolveResult result;
    result.vector.p = p;
    if (edge_count(g) == 0) {
        result.vector.entries.assign(static_cast<std::size_t>(n),
                                     std::pow(static_cast<double>(n), -1.0 / p));
        result.status = options.require_positive ? SolveStatus::degenerate_input
                                                 : SolveStatus::converged;
        return result;
    }

    const int total_starts = std::max(1, options.restarts);
    std::vector<std::vector<double>> starts;
    starts.reserve(static_cast<std::size_t>(total_starts));

    std::vector<double> uniform(static_cast<std::size_t>(n), 1.0);
    starts.push_back(uniform);

    // clique-supported starts pull the iteration toward concentrated optima,
    // which matter for 1 < p < 2; the small floor keeps the support full
    for (std::uint64_t clique : maximal_cliques(g)) {
        if (static_cast<int>(starts.size()) >= total_starts)
            break;
        std::vector<double> x(static_cast<std::size_t>(n), 0.01);
        for (int v = 0; v < n; ++v)
            if ((clique >> v) & 1u)
                x[static_cast<std::size_t>(v)] = 1.0;
        starts.push_back(std::move(x));
    }

    std::mt19937_64 rng(options.seed);
    while (static_cast<int>(starts.size()) < total_starts) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x)
            v = 0.05 + uniform01(rng);
        starts.push_back(std::move(x));
    }

    RunOutcome best;
    bool have_best = false;
    for (auto& start : starts) {
        double norm = p_norm(start, p);
        for (auto& v : start)
            v /= norm;
        RunOutcome out = run_start(g, p, std::move(start), options.tol, options.max_iter);
        if (!have_best || better_outcome(out, best)) {
            best = std::move(out);
            have_best = true;
        }
    }

    result.lambda = quadratic_form(g, best.x);
    result.vector.entries = std::move(best.x);
    result.residual = best.residual;
    result.iterations = best.iterations;
    result.restarts_used = static_cast<int>(starts.size());
    result.status = best.converged ? SolveStatus::converged : SolveStatus::max_iterations;
    certify_closed_form_bounds(g, p, result.lambda);
    return result;
}

double lambda_1_exact(const Graph& g) {
    if (g.order() == 0)
        return 0.0;
    return 1.0 - 1.0 / clique_number(g);
}

double lambda_infinity(const Graph& g) {
    return 2.0 * edge_count(g);
}

namespace {

double simplex_eval(const std::vector<std::pair<int, int>>& edges,
                    const std::vector<double>& z, double inv_p) {
    double acc = 0.0;
    for (auto [u, v] : edges) {
        double prod = z[static_cast<std::size_t>(u)] * z[static_cast<std::size_t>(v)];
        if (prod > 0.0)
            acc += std::pow(prod, inv_p);
    }
    return 2.0 * acc;
}

double refine_candidate(const std::vector<std::pair<int, int>>& edges,
                        std::vector<double> z, double inv_p, double start_step,
                        double resolution) {
    const std::size_t n = z.size();
    double f = simplex_eval(edges, z, inv_p);
    for (double step = start_step; step > resolution / 8.0; step /= 2.0) {
        for (int sweep = 0; sweep < 200; ++sweep) {
            bool improved = false;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || z[j] < step)
                        continue;
                    z[i] += step;
                    z[j] -= step;
                    double f2 = simplex_eval(edges, z, inv_p);
                    if (f2 > f + 1e-14) {
                        f = f2;
                        improved = true;
                    } else {
                        z[i] -= step;
                        z[j] += step;
                    }
                }
            }
            if (!improved)
                break;
        }
    }
    return f;
}

template <typename Visit>
void enumerate_compositions(int remaining, std::size_t index, std::vector<int>& counts,
                            Visit&& visit) {
    if (index + 1 == counts.size()) {
        counts[index] = remaining;
        visit(counts);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        counts[index] = c;
        enumerate_compositions(remaining - c, index + 1, counts, visit);
    }
}

} // namespace

double brute_force_lambda(const Graph& g, double p, double resolution) {
    if (g.order() > 6)
        throw std::invalid_argument("brute_force_lambda supports at most 6 vertices");
    if (!(p >= 1.0))
        throw std::invalid_argument("brute_force_lambda requires p >= 1");
    if (!(resolution > 0.0))
        throw std::invalid_argument("resolution must be positive");
    const int n = g.order();
    if (n == 0 || edge_count(g) == 0)
        return 0.0;

    auto edges = g.edges();
    const double inv_p = 1.0 / p;

    // grid divisions: as fine as a 150k-point budget allows
    const double budget = 150000.0;
    auto grid_points = [n](int divisions) {
        double pts = 1.0;
        for (int k = 1; k < n; ++k)
            pts *= static_cast<double>(divisions + k) / static_cast<double>(k);
        return pts; // C(divisions + n - 1, n - 1)
    };
    int m = 1;
    while (m < 4096 && grid_points(m + 1) <= budget)
        ++m;

    struct Candidate {
        double f;
        std::vector<double> z;
    };
    std::vector<Candidate> top;
    const std::size_t keep = 5;

    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    enumerate_compositions(m, 0, counts, [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = static_cast<double>(c[i]) / static_cast<double>(m);
        double f = simplex_eval(edges, z, inv_p);
        if (top.size() < keep || f > top.back().f) {
            top.push_back({f, z});
            std::sort(top.begin(), top.end(),
                      [](const Candidate& a, const Candidate& b) { return a.f > b.f; });
            if (top.size() > keep)
                top.pop_back();
        }
    });

    double best = 0.0;
    for (auto& cand : top)
        best = std::max(best, refine_candidate(edges, cand.z, inv_p,
                                               1.0 / static_cast<double>(m), resolution));
    return best;
}

std::string to_json(const SolveResult& r) {
    std::ostringstream out;
    out << "{\"lambda\":" << format_double(r.lambda)
        << ",\"residual\":" << format_double(r.residual)
        << ",\"iterations\":" << r.iterations
        << ",\"restarts_used\":" << r.restarts_used
        << ",\"status\":\"" << to_string(r.status) << "\""
        << ",\"vector\":[";
    for (std::size_t i = 0; i < r.vector.entries.size(); ++i) {
        if (i)
            out << ',';
        out << format_double(r.vector.entries[i]);
    }
    out << "]}";
    return out.str();
}

} // namespace pspec
