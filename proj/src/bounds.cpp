#include "pspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pspec/format.hpp"

namespace pspec {

namespace {

BoundReport upper_bound_report(std::string id, double lhs, double rhs, BoundContext ctx,
                               double tolerance = slack_tolerance) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.pass = r.slack >= -tolerance;
    r.equality = std::fabs(r.slack) <= slack_tolerance;
    r.context = std::move(ctx);
    return r;
}

} // namespace

BoundReport check_absolute_max(int n, double p, double lambda) {
    if (n < 1 || !(p >= 1.0))
        throw std::invalid_argument("check_absolute_max requires n >= 1 and p >= 1");
    double bound = (n - 1.0) * std::pow(static_cast<double>(n), 1.0 - 2.0 / p);
    return upper_bound_report("max", lambda, bound, BoundContext{"", n, 0, p});
}

BoundReport check_edge_upper(long long e, double p, double lambda) {
    if (e < 0 || !(p >= 1.0))
        throw std::invalid_argument("check_edge_upper requires e >= 0 and p >= 1");
    double bound = std::pow(2.0 * static_cast<double>(e), 1.0 - 1.0 / p);
    return upper_bound_report("me", lambda, bound, BoundContext{"", 0, 0, p});
}

BoundReport check_uniform_lower(long long e, int n, double p, double lambda) {
    if (e < 0 || n < 1 || !(p >= 1.0))
        throw std::invalid_argument("check_uniform_lower requires e >= 0, n >= 1, p >= 1");
    double bound = 2.0 * static_cast<double>(e) * std::pow(static_cast<double>(n), -2.0 / p);
    return upper_bound_report("md", bound, lambda, BoundContext{"", n, 0, p});
}

std::vector<BoundReport> check_monotone_in_p(std::vector<std::pair<double, double>> p_lambda,
                                             int n) {
    if (n < 1)
        throw std::invalid_argument("check_monotone_in_p requires n >= 1");
    std::stable_sort(p_lambda.begin(), p_lambda.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BoundReport> out;
    for (std::size_t i = 1; i < p_lambda.size(); ++i) {
        auto [q, lam_q] = p_lambda[i - 1];
        auto [p, lam_p] = p_lambda[i];
        double lower = lam_q * std::pow(static_cast<double>(n), 2.0 / q);
        double upper = lam_p * std::pow(static_cast<double>(n), 2.0 / p);
        BoundReport r = upper_bound_report("inc", upper, lower,
                                           BoundContext{"", n, 0, p}, 1e-8);
        out.push_back(std::move(r));
    }
    return out;
}

std::pair<BoundReport, BoundReport> check_clique_bounds(double lambda, long long e, int n,
                                                        int r, double p) {
    if (r < 1)
        throw std::invalid_argument("check_clique_bounds requires r >= 1");
    if (n < 1 || e < 0 || !(p >= 1.0))
        throw std::invalid_argument("check_clique_bounds arguments out of range");
    double ratio = 1.0 - 1.0 / r;
    double in0 = std::pow(ratio, 1.0 / p) * std::pow(2.0 * static_cast<double>(e), 1.0 - 1.0 / p);
    double in1 = ratio * std::pow(static_cast<double>(n), 2.0 - 2.0 / p);
    BoundContext ctx{"", n, r, p};
    return {upper_bound_report("in0", lambda, in0, ctx),
            upper_bound_report("in1", lambda, in1, ctx)};
}

long long turan_edges_exact(int r, int n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("turan_edges_exact requires r >= 1 and n >= 1");
    long long s = n / r;
    long long t = n % r;
    // e = C(r,2)(n^2 - t^2)/r^2 + C(t,2) = (r-1)s(rs + 2t)/2 + t(t-1)/2
    return (static_cast<long long>(r) - 1) * s * (static_cast<long long>(r) * s + 2 * t) / 2 +
           t * (t - 1) / 2;
}

BoundReport check_turan_edge_lower(int r, int n) {
    long long e = turan_edges_exact(r, n);
    // scaled by 4r: 8er >= 4(r-1)n^2 - r^2
    long long lhs4 = 4 * (static_cast<long long>(r) - 1) * n * n - static_cast<long long>(r) * r;
    long long rhs4 = 8 * e * r;
    BoundReport rep;
    rep.bound_id = "te";
    rep.lhs = static_cast<double>(lhs4) / (4.0 * r);
    rep.rhs = 2.0 * static_cast<double>(e);
    rep.slack = static_cast<double>(rhs4 - lhs4) / (4.0 * r);
    rep.pass = rhs4 >= lhs4;
    rep.equality = rhs4 == lhs4;
    rep.context = BoundContext{"", n, r, 0.0};
    return rep;
}

BoundReport check_turan_edge_formula(int r, int n) {
    long long built = edge_count(turan_graph(r, n));
    long long closed = turan_edges_exact(r, n);
    BoundReport rep;
    rep.bound_id = "edge-formula";
    rep.lhs = static_cast<double>(built);
    rep.rhs = static_cast<double>(closed);
    rep.slack = built == closed ? 0.0 : -std::fabs(rep.rhs - rep.lhs);
    rep.pass = built == closed;
    rep.equality = rep.pass;
    rep.context = BoundContext{"", n, r, 0.0};
    return rep;
}

TuranBracketReports check_turan_lambda_brackets(int r, int n, double p, double lambda) {
    if (r < 1 || n < 1 || !(p >= 1.0))
        throw std::invalid_argument("check_turan_lambda_brackets arguments out of range");
    TuranBracketReports out;
    BoundContext ctx{"", n, r, p};
    double ratio = 1.0 - 1.0 / r;
    if (p == 1.0) {
        BoundReport l1;
        l1.bound_id = "l1";
        l1.lhs = lambda;
        l1.rhs = ratio;
        l1.slack = -std::fabs(l1.rhs - l1.lhs);
        l1.pass = l1.slack >= -slack_tolerance;
        l1.equality = l1.pass;
        l1.context = ctx;
        out.l1 = std::move(l1);
        return out;
    }
    double mid = lambda * std::pow(static_cast<double>(n), 2.0 / p);
    double e2 = 2.0 * static_cast<double>(turan_edges_exact(r, n));

    auto bracket = [&](std::string id, double lower, double upper) {
        BoundReport rep;
        rep.bound_id = std::move(id);
        rep.lhs = mid;
        rep.rhs = upper;
        rep.slack = std::min(upper - mid, mid - lower);
        rep.pass = rep.slack >= -slack_tolerance;
        rep.equality = std::fabs(rep.slack) <= slack_tolerance;
        rep.context = ctx;
        return rep;
    };
    out.le = bracket("le", e2, e2 * (1.0 + r / (p * static_cast<double>(n) * n)));
    out.lv = bracket("lv", ratio * static_cast<double>(n) * n - r / 4.0,
                     ratio * static_cast<double>(n) * n);
    return out;
}

BoundReport motzkin_straus_check(const Graph& g, const std::vector<double>& weights, int r) {
    if (r < 1)
        throw std::invalid_argument("motzkin_straus_check requires r >= 1");
    if (static_cast<int>(weights.size()) != g.order())
        throw std::invalid_argument("weight length does not match graph order");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw std::invalid_argument("motzkin_straus_check requires nonnegative weights");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("motzkin_straus_check requires weights summing to 1");
    double lhs = 0.0;
    for (auto [u, v] : g.edges())
        lhs += weights[static_cast<std::size_t>(u)] * weights[static_cast<std::size_t>(v)];
    lhs *= 2.0;
    return upper_bound_report("motzkin-straus", lhs, 1.0 - 1.0 / r,
                              BoundContext{"", g.order(), r, 1.0});
}

std::string bound_csv_header() { return "bound_id,graph,n,r,p,lhs,rhs,slack,pass"; }

std::string to_csv_row(const BoundReport& report) {
    std::ostringstream out;
    out << report.bound_id << ',' << report.context.graph << ',' << report.context.n << ','
        << report.context.r << ',' << format_double(report.context.p) << ','
        << format_double(report.lhs) << ',' << format_double(report.rhs) << ','
        << format_double(report.slack) << ',' << (report.pass ? "true" : "false");
    return out.str();
}

} // namespace pspec
