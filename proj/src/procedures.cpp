#include "pspec/procedures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pspec/format.hpp"

namespace pspec {

std::string to_string(CheckOutcome c) {
    switch (c) {
    case CheckOutcome::pass: return "pass";
    case CheckOutcome::fail: return "fail";
    case CheckOutcome::not_applicable: return "not-applicable";
    }
    return "unknown";
}

double weighted_degree(const Graph& g, const std::vector<double>& x, int v) {
    double acc = 0.0;
    std::uint64_t m = g.neighbor_mask(v);
    while (m) {
        acc += x[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
    }
    return acc;
}

namespace {

double masked_weighted_degree(const Graph& g, const std::vector<double>& x, int v,
                              std::uint64_t mask) {
    double acc = 0.0;
    std::uint64_t m = g.neighbor_mask(v) & mask;
    while (m) {
        acc += x[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
    }
    return acc;
}

bool has_internal_edge(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (g.neighbor_mask(v) & mask)
            return true;
    }
    return false;
}

void build_parts(const Graph& g, const std::vector<double>& x, std::uint64_t mask,
                 std::vector<std::uint64_t>& parts) {
    if (mask == 0)
        return;
    if (!has_internal_edge(g, mask)) {
        parts.push_back(mask);
        return;
    }
    int u = -1;
    double best = -1.0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        double d = masked_weighted_degree(g, x, v, mask);
        if (d > best) {
            best = d;
            u = v;
        }
    }
    std::uint64_t inner = g.neighbor_mask(u) & mask;
    std::uint64_t rest = mask & ~inner;
    build_parts(g, x, inner, parts);
    parts.push_back(rest);
}

} // namespace

Graph symmetrize(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("vector length does not match graph order");
    for (double v : x)
        if (v < 0.0)
            throw std::invalid_argument("symmetrize requires nonnegative weights");
    std::uint64_t all = g.order() == 0 ? 0 : (std::uint64_t{1} << g.order()) - 1;
    std::vector<std::uint64_t> parts;
    build_parts(g, x, all, parts);
    Graph h(g.order());
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (std::uint64_t ma = parts[a]; ma; ma &= ma - 1)
                for (std::uint64_t mb = parts[b]; mb; mb &= mb - 1)
                    h.add_edge(std::countr_zero(ma), std::countr_zero(mb));
    for (int v = 0; v < g.order(); ++v) {
        if (weighted_degree(h, x, v) < weighted_degree(g, x, v) - 1e-12)
            throw std::logic_error("symmetrize produced a dominated weighted degree");
    }
    return h;
}

Graph symmetrize(const Graph& g, const WeightVector& x) { return symmetrize(g, x.entries); }

double sigma_of(const std::vector<double>& x, double p) {
    if (x.empty())
        throw std::invalid_argument("sigma_of requires a nonempty vector");
    double best = std::pow(std::fabs(x[0]), p);
    for (std::size_t i = 1; i < x.size(); ++i)
        best = std::min(best, std::pow(std::fabs(x[i]), p));
    return best;
}

namespace {

constexpr double lemma_tolerance = 1e-8;

// shared hypothesis gate for the two lemmas; strict_lambda selects between
// "> An - R/n" and ">= An - R/n"
bool lemma_hypotheses(int n, int delta, double p, double A, double gamma, double R,
                      double lambda, bool strict_lambda, std::string& why) {
    if (!(p > 1.0 && p <= 2.0)) {
        why = "requires 1 < p <= 2";
        return false;
    }
    if (!(gamma > 0.0 && gamma < A && A < 1.0)) {
        why = "requires 0 < gamma < A < 1";
        return false;
    }
    if (R < 0.0) {
        why = "requires R >= 0";
        return false;
    }
    if (static_cast<double>(n) < 4.0 * R / gamma) {
        why = "requires n >= 4R/gamma";
        return false;
    }
    double cert = lambda * std::pow(static_cast<double>(n), 2.0 / p - 1.0);
    double needed = A * n - R / n;
    if (strict_lambda ? !(cert > needed) : !(cert >= needed)) {
        why = "lambda hypothesis fails";
        return false;
    }
    if (!(static_cast<double>(delta) <= (A - gamma) * n)) {
        why = "minimum degree hypothesis fails";
        return false;
    }
    return true;
}

} // namespace

LemmaCheck assert_lemma_le0(const Graph& g, double p, double A, double gamma, double R,
                            const SolveResult& solved) {
    LemmaCheck check;
    int n = g.order();
    if (n < 1) {
        check.detail = "empty graph";
        return check;
    }
    std::string why;
    if (!lemma_hypotheses(n, min_degree(g), p, A, gamma, R, solved.lambda, true, why)) {
        check.detail = why;
        return check;
    }
    check.lhs = sigma_of(solved.vector.entries, p);
    check.rhs = (1.0 - gamma / 2.0) / n;
    check.outcome =
        check.lhs <= check.rhs + lemma_tolerance ? CheckOutcome::pass : CheckOutcome::fail;
    return check;
}

namespace {

LemmaCheck le1_core(int n, int delta, double p, double A, double gamma, double R,
                    double lambda_n, double lambda_n_minus_1) {
    LemmaCheck check;
    if (n < 2) {
        check.detail = "needs at least two vertices";
        return check;
    }
    std::string why;
    if (!lemma_hypotheses(n, delta, p, A, gamma, R, lambda_n, false, why)) {
        check.detail = why;
        return check;
    }
    double expo = 2.0 / p - 1.0;
    check.lhs = lambda_n_minus_1 * std::pow(static_cast<double>(n - 1), expo);
    check.rhs = std::pow(static_cast<double>(n - 2) / (n - 1), 1.0 - (1.0 - 1.0 / p) * gamma) *
                lambda_n * std::pow(static_cast<double>(n), expo);
    check.outcome =
        check.lhs >= check.rhs - lemma_tolerance ? CheckOutcome::pass : CheckOutcome::fail;
    return check;
}

} // namespace

LemmaCheck assert_lemma_le1_step(const Graph& g, double p, double A, double gamma, double R,
                                 double lambda_n, double lambda_n_minus_1) {
    int n = g.order();
    if (n < 2) {
        LemmaCheck check;
        check.detail = "needs at least two vertices";
        return check;
    }
    return le1_core(n, min_degree(g), p, A, gamma, R, lambda_n, lambda_n_minus_1);
}

void validate(const ExtractionParams& params) {
    if (!(params.p > 1.0))
        throw std::invalid_argument("extraction requires p > 1");
    if (!(params.gamma > 0.0 && 4.0 * params.gamma < params.A && params.A < 1.0))
        throw std::invalid_argument("extraction requires 0 < 4 gamma < A < 1");
    if (params.R < 0.0)
        throw std::invalid_argument("extraction requires R >= 0");
}

namespace {

CheckOutcome aggregate(const std::vector<CheckOutcome>& outcomes) {
    bool any = false;
    for (CheckOutcome c : outcomes) {
        if (c == CheckOutcome::fail)
            return CheckOutcome::fail;
        if (c == CheckOutcome::pass)
            any = true;
    }
    return any ? CheckOutcome::pass : CheckOutcome::not_applicable;
}

} // namespace

std::pair<Graph, ExtractionTrace> extract_dense_subgraph(const Graph& g,
                                                         const ExtractionParams& params,
                                                         const SolveOptions& solve) {
    validate(params);
    const int n0 = g.order();
    if (n0 < 1)
        throw std::invalid_argument("extraction requires a nonempty graph");
    const double p = params.p;
    const double A = params.A;
    const double gamma = params.gamma;
    const double R = params.R;
    const double expo = 2.0 / p - 1.0;
    const double order_floor = std::pow(A, p / (gamma * p - gamma)) * n0;

    ExtractionTrace trace;
    trace.params = params;

    Graph cur = g;
    std::vector<int> labels(static_cast<std::size_t>(n0));
    std::iota(labels.begin(), labels.end(), 0);

    while (cur.order() >= 1 &&
           static_cast<double>(min_degree(cur)) <= (A - gamma) * cur.order()) {
        const int i = cur.order();
        SolveResult res = solve_lambda_p(cur, p, solve);
        ExtractionStep step;
        step.order = i;
        step.lambda = res.lambda;
        step.certificate = res.lambda * std::pow(static_cast<double>(i), expo);
        step.min_degree = min_degree(cur);
        step.sigma = sigma_of(res.vector.entries, p);
        step.b1 = static_cast<double>(i) > order_floor ? CheckOutcome::pass : CheckOutcome::fail;
        step.le0 = assert_lemma_le0(cur, p, A, gamma, R, res).outcome;

        int u = 0;
        for (int v = 1; v < i; ++v)
            if (res.vector.entries[static_cast<std::size_t>(v)] <
                res.vector.entries[static_cast<std::size_t>(u)])
                u = v;
        step.removed_vertex = labels[static_cast<std::size_t>(u)];
        trace.steps.push_back(step);

        cur = delete_vertex(cur, u);
        labels.erase(labels.begin() + u);
    }

    trace.final_order = cur.order();
    trace.exhausted = cur.order() == 0;
    if (!trace.exhausted)
        trace.final_lambda = solve_lambda_p(cur, p, solve).lambda;

    // le1 and b2 relate consecutive lambdas, so they resolve one step late
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        ExtractionStep& step = trace.steps[s];
        double next_lambda;
        if (s + 1 < trace.steps.size())
            next_lambda = trace.steps[s + 1].lambda;
        else if (!trace.exhausted)
            next_lambda = trace.final_lambda;
        else
            continue; // last removal emptied the graph, nothing to relate

        step.le1 = le1_core(step.order, step.min_degree, p, A, gamma, R, step.lambda,
                            next_lambda).outcome;
        if (step.order >= 2) {
            double lhs = next_lambda * std::pow(static_cast<double>(step.order - 1), expo);
            double rhs = std::pow(1.0 - 1.0 / (step.order - 1), 1.0 - (1.0 - 1.0 / p) * gamma) *
                         step.lambda * std::pow(static_cast<double>(step.order), expo);
            step.b2 = lhs > rhs - lemma_tolerance ? CheckOutcome::pass : CheckOutcome::fail;
        }
    }

    std::vector<CheckOutcome> b1s, b2s;
    for (const auto& step : trace.steps) {
        b1s.push_back(step.b1);
        b2s.push_back(step.b2);
    }
    trace.b1 = aggregate(b1s);
    trace.b2 = aggregate(b2s);

    const int k = trace.final_order;
    trace.c1 = trace.exhausted
                   ? CheckOutcome::not_applicable
                   : (static_cast<double>(min_degree(cur)) > (A - gamma) * k
                          ? CheckOutcome::pass
                          : CheckOutcome::fail);
    trace.c2 = static_cast<double>(k) > order_floor ? CheckOutcome::pass : CheckOutcome::fail;
    trace.c3 = trace.exhausted
                   ? CheckOutcome::not_applicable
                   : (trace.final_lambda * std::pow(static_cast<double>(k), expo) >
                              A * k - lemma_tolerance
                          ? CheckOutcome::pass
                          : CheckOutcome::fail);

    trace.param_range = (p > 1.0 && p <= 2.0) ? CheckOutcome::pass : CheckOutcome::fail;
    double threshold =
        4.0 * (R + 1.0) * p / (gamma * (p - 1.0)) * std::pow(A, -p / (gamma * p - gamma));
    trace.n_threshold =
        static_cast<double>(n0) > threshold ? CheckOutcome::pass : CheckOutcome::fail;
    double lambda_n0 = trace.steps.empty() ? trace.final_lambda : trace.steps.front().lambda;
    trace.lambda_hypothesis =
        lambda_n0 * std::pow(static_cast<double>(n0), expo) >= A * n0 - R / n0
            ? CheckOutcome::pass
            : CheckOutcome::fail;
    trace.delta_hypothesis = static_cast<double>(min_degree(g)) <= (A - gamma) * n0
                                 ? CheckOutcome::pass
                                 : CheckOutcome::fail;
    trace.preconditions_met =
        trace.param_range == CheckOutcome::pass && trace.n_threshold == CheckOutcome::pass &&
        trace.lambda_hypothesis == CheckOutcome::pass &&
        trace.delta_hypothesis == CheckOutcome::pass;

    return {std::move(cur), std::move(trace)};
}

std::pair<Graph, ExtractionTrace> extract_with_p_reduction(const Graph& g,
                                                           const ExtractionParams& params,
                                                           const SolveOptions& solve) {
    if (!(params.p > 2.0))
        throw std::invalid_argument("p reduction applies only for p > 2");
    ExtractionParams reduced = params;
    reduced.p = 2.0;
    auto [h, trace] = extract_dense_subgraph(g, reduced, solve);
    SolveResult original = solve_lambda_p(g, params.p, solve);
    trace.has_original_p = true;
    trace.original_p = params.p;
    trace.original_certificate =
        original.lambda * std::pow(static_cast<double>(g.order()), 2.0 / params.p - 1.0);
    return {std::move(h), std::move(trace)};
}

std::string ExtractionTrace::to_json() const {
    std::ostringstream out;
    out << "{\"params\":{\"p\":" << format_double(params.p)
        << ",\"A\":" << format_double(params.A)
        << ",\"gamma\":" << format_double(params.gamma)
        << ",\"R\":" << format_double(params.R) << "}";
    if (has_original_p)
        out << ",\"original_p\":" << format_double(original_p)
            << ",\"original_certificate\":" << format_double(original_certificate);
    out << ",\"preconditions\":{\"param_range\":\"" << pspec::to_string(param_range)
        << "\",\"n_threshold\":\"" << pspec::to_string(n_threshold)
        << "\",\"lambda_hypothesis\":\"" << pspec::to_string(lambda_hypothesis)
        << "\",\"delta_hypothesis\":\"" << pspec::to_string(delta_hypothesis)
        << "\",\"met\":" << (preconditions_met ? "true" : "false") << "}";
    out << ",\"steps\":[";
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto& st = steps[s];
        if (s)
            out << ',';
        out << "{\"order\":" << st.order << ",\"removed\":" << st.removed_vertex
            << ",\"lambda\":" << format_double(st.lambda)
            << ",\"certificate\":" << format_double(st.certificate)
            << ",\"min_degree\":" << st.min_degree
            << ",\"sigma\":" << format_double(st.sigma)
            << ",\"le0\":\"" << pspec::to_string(st.le0)
            << "\",\"le1\":\"" << pspec::to_string(st.le1)
            << "\",\"b1\":\"" << pspec::to_string(st.b1)
            << "\",\"b2\":\"" << pspec::to_string(st.b2) << "\"}";
    }
    out << "],\"final_order\":" << final_order
        << ",\"exhausted\":" << (exhausted ? "true" : "false")
        << ",\"final_lambda\":" << format_double(final_lambda)
        << ",\"verdicts\":{\"b1\":\"" << pspec::to_string(b1)
        << "\",\"b2\":\"" << pspec::to_string(b2)
        << "\",\"c1\":\"" << pspec::to_string(c1)
        << "\",\"c2\":\"" << pspec::to_string(c2)
        << "\",\"c3\":\"" << pspec::to_string(c3) << "\"}}";
    return out.str();
}

} // namespace pspec
