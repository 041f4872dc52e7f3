#include "pspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "pspec/bounds.hpp"
#include "pspec/cliques.hpp"
#include "pspec/enumerate.hpp"
#include "pspec/format.hpp"
#include "pspec/subgraph.hpp"

namespace pspec {

namespace {

constexpr double margin_threshold = 1e-7;
constexpr double equality_window = 1e-9;

void parallel_for(long count, int workers, const std::function<void(long)>& fn) {
    if (workers <= 1 || count < 2) {
        for (long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mtx;
    auto body = [&] {
        try {
            for (long i; (i = next.fetch_add(1)) < count;)
                fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mtx);
            if (!error)
                error = std::current_exception();
            next.store(count);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(body);
    body();
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<Graph> load_graphs(int n, const std::function<bool(const Graph&)>& pred,
                               const std::string& file) {
    if (file.empty())
        return enumerate_graphs(n, pred);
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open graph6 file: " + file);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        Graph g = parse_graph6(line);
        if (g.order() != n)
            throw std::runtime_error("graph6 file contains a graph of unexpected order");
        if (!pred || pred(g))
            out.push_back(std::move(g));
    }
    return out;
}

void sort_rows(std::vector<GraphOutcome>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const GraphOutcome& a, const GraphOutcome& b) {
        if (a.graph6 != b.graph6)
            return a.graph6 < b.graph6;
        return a.p < b.p;
    });
}

void finish(VerificationReport& report, std::chrono::steady_clock::time_point started) {
    sort_rows(report.rows);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
}

double high_precision_lambda(const Graph& g, double p, SolveOptions opts) {
    opts.tol = 1e-13;
    opts.restarts = 64;
    return solve_lambda_p(g, p, opts).lambda;
}

} // namespace

VerificationReport verify_turan_extremal(int n, int r, double p,
                                         const HarnessOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (!(p > 1.0))
        throw std::invalid_argument("verify_turan_extremal requires p > 1");
    VerificationReport report;
    report.theorem_id = "tur";
    report.n = n;
    report.r = r;
    report.p_values = {p};

    auto graphs = load_graphs(
        n, [r](const Graph& g) { return clique_number(g) <= r; }, options.graph6_file);
    report.total = static_cast<long>(graphs.size());

    Graph turan = turan_graph(r, n);
    double lambda_t = solve_lambda_p(turan, p, options.solve).lambda;

    std::vector<double> lambdas(graphs.size());
    std::vector<char> is_turan(graphs.size(), 0);
    parallel_for(static_cast<long>(graphs.size()), options.workers, [&](long i) {
        const Graph& g = graphs[static_cast<std::size_t>(i)];
        lambdas[static_cast<std::size_t>(i)] = solve_lambda_p(g, p, options.solve).lambda;
        is_turan[static_cast<std::size_t>(i)] = is_isomorphic(g, turan) ? 1 : 0;
    });

    // refine borderline graphs before judging them
    bool refined_t = false;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (is_turan[i])
            continue;
        if (lambda_t - lambdas[i] <= margin_threshold) {
            if (!refined_t) {
                lambda_t = high_precision_lambda(turan, p, options.solve);
                refined_t = true;
            }
            lambdas[i] = high_precision_lambda(graphs[i], p, options.solve);
        }
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        GraphOutcome row;
        row.graph6 = write_graph6(graphs[i]);
        row.p = p;
        row.lambda = lambdas[i];
        if (is_turan[i]) {
            row.margin = 0.0;
            row.verdict = "maximizer";
        } else {
            row.margin = lambda_t - lambdas[i];
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, row.margin);
            if (row.margin < -equality_window) {
                row.verdict = "violation";
                ++report.violations;
            } else if (row.margin <= margin_threshold) {
                row.verdict = "inconclusive";
                ++report.inconclusive;
            } else {
                row.verdict = "ok";
            }
        }
        report.rows.push_back(std::move(row));
    }
    finish(report, started);
    return report;
}

VerificationReport verify_clique_reformulation(int n, double p,
                                               const HarnessOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (!(p > 1.0))
        throw std::invalid_argument("verify_clique_reformulation requires p > 1");
    VerificationReport report;
    report.theorem_id = "clique";
    report.n = n;
    report.p_values = {p};

    auto graphs = load_graphs(n, {}, options.graph6_file);
    report.total = static_cast<long>(graphs.size());

    std::vector<Graph> turans;
    std::vector<double> lambda_t(static_cast<std::size_t>(n) + 1, 0.0);
    turans.push_back(Graph(0));
    for (int w = 1; w <= n; ++w) {
        turans.push_back(turan_graph(w, n));
        lambda_t[static_cast<std::size_t>(w)] =
            solve_lambda_p(turans.back(), p, options.solve).lambda;
    }

    std::vector<double> lambdas(graphs.size());
    std::vector<int> omegas(graphs.size());
    std::vector<char> is_t(graphs.size(), 0);
    parallel_for(static_cast<long>(graphs.size()), options.workers, [&](long idx) {
        std::size_t i = static_cast<std::size_t>(idx);
        const Graph& g = graphs[i];
        lambdas[i] = solve_lambda_p(g, p, options.solve).lambda;
        omegas[i] = clique_number(g);
        is_t[i] = is_isomorphic(g, turans[static_cast<std::size_t>(omegas[i])]) ? 1 : 0;
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        GraphOutcome row;
        row.graph6 = write_graph6(graphs[i]);
        row.p = p;
        row.lambda = lambdas[i];
        int w = omegas[i];
        if (is_t[i]) {
            row.margin = 0.0;
            row.verdict = "turan-maximizer";
        } else {
            double margin = lambda_t[static_cast<std::size_t>(w)] - lambdas[i];
            if (margin <= margin_threshold) {
                double lt = high_precision_lambda(turans[static_cast<std::size_t>(w)], p,
                                                  options.solve);
                double lg = high_precision_lambda(graphs[i], p, options.solve);
                margin = lt - lg;
            }
            row.margin = margin;
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, margin);
            if (margin < -equality_window) {
                row.verdict = "violation";
                ++report.violations;
            } else if (margin <= margin_threshold) {
                row.verdict = "inconclusive";
                ++report.inconclusive;
            } else {
                row.verdict = "ok";
            }
        }
        report.rows.push_back(std::move(row));
    }

    for (int rr = 2; rr <= n; ++rr) {
        for (int q = 2; q < rr; ++q) {
            ChainOutcome link;
            link.r = rr;
            link.q = q;
            link.margin = lambda_t[static_cast<std::size_t>(rr)] -
                          lambda_t[static_cast<std::size_t>(q)];
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, link.margin);
            if (link.margin > margin_threshold) {
                link.verdict = "ok";
            } else {
                link.verdict = "chain-violation";
                ++report.violations;
            }
            report.chain.push_back(link);
        }
    }
    finish(report, started);
    return report;
}

VerificationReport verify_saturation_desk(int n, int r, double p,
                                          const HarnessOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (!(p > 1.0))
        throw std::invalid_argument("verify_saturation_desk requires p > 1");
    VerificationReport report;
    report.theorem_id = "saturation";
    report.n = n;
    report.r = r;
    report.p_values = {p};

    auto graphs = load_graphs(n, {}, options.graph6_file);
    report.total = static_cast<long>(graphs.size());

    Graph turan = turan_graph(r, n);
    double lambda_t = solve_lambda_p(turan, p, options.solve).lambda;
    double lekd_degree = (1.0 - 1.0 / r - 1.0 / std::pow(static_cast<double>(r), 4)) * n;
    double lekd_bound = std::pow(static_cast<double>(n), r - 1) /
                        std::pow(static_cast<double>(r), r + 3);

    std::vector<double> lambdas(graphs.size());
    std::vector<long long> joints(graphs.size());
    std::vector<int> omegas(graphs.size());
    std::vector<char> is_t(graphs.size(), 0);
    parallel_for(static_cast<long>(graphs.size()), options.workers, [&](long idx) {
        std::size_t i = static_cast<std::size_t>(idx);
        const Graph& g = graphs[i];
        lambdas[i] = solve_lambda_p(g, p, options.solve).lambda;
        joints[i] = joint_size(g, r + 1);
        omegas[i] = clique_number(g);
        is_t[i] = is_isomorphic(g, turan) ? 1 : 0;
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        GraphOutcome row;
        row.graph6 = write_graph6(g);
        row.p = p;
        row.lambda = lambdas[i];
        row.margin = lambdas[i] - lambda_t;
        if (is_t[i]) {
            row.verdict = "turan";
        } else if (row.margin >= -equality_window) {
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, row.margin);
            if (joints[i] >= 1) {
                row.verdict = "ok";
            } else {
                row.verdict = "violation";
                ++report.violations;
            }
        } else {
            row.verdict = "below-threshold";
        }
        if (omegas[i] >= r + 1 && static_cast<double>(min_degree(g)) > lekd_degree) {
            ++report.checked;
            if (static_cast<double>(joints[i]) > lekd_bound) {
                row.verdict += ";lekd-ok";
            } else {
                row.verdict += ";lekd-violation";
                ++report.violations;
            }
        }
        report.rows.push_back(std::move(row));
    }
    finish(report, started);
    return report;
}

VerificationReport verify_kr_plus_presence(int n, int r, double p, int t,
                                           const HarnessOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (!(p > 1.0))
        throw std::invalid_argument("verify_kr_plus_presence requires p > 1");
    if (t < 1)
        throw std::invalid_argument("verify_kr_plus_presence requires t >= 1");
    VerificationReport report;
    report.theorem_id = "krplus";
    report.n = n;
    report.r = r;
    report.t = t;
    report.p_values = {p};

    // K_r^+(1) degenerates; the smallest honest pattern with t = 1 keeps the
    // doubled first part, which for r = 2 is exactly the forced triangle
    Graph pattern = t == 1 ? kr_plus(r, 2, 1) : kr_plus(r, t, t);
    const bool assert_mode = (r == 2 && t == 1);

    auto graphs = load_graphs(n, {}, options.graph6_file);
    report.total = static_cast<long>(graphs.size());

    Graph turan = turan_graph(r, n);
    double lambda_t = solve_lambda_p(turan, p, options.solve).lambda;

    std::vector<double> lambdas(graphs.size());
    std::vector<char> contains(graphs.size(), 0);
    parallel_for(static_cast<long>(graphs.size()), options.workers, [&](long idx) {
        std::size_t i = static_cast<std::size_t>(idx);
        lambdas[i] = solve_lambda_p(graphs[i], p, options.solve).lambda;
        contains[i] = subgraph_contains(graphs[i], pattern) ? 1 : 0;
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        GraphOutcome row;
        row.graph6 = write_graph6(graphs[i]);
        row.p = p;
        row.lambda = lambdas[i];
        row.margin = lambdas[i] - lambda_t;
        if (row.margin <= equality_window) {
            row.verdict = "not-above";
        } else if (assert_mode) {
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, row.margin);
            if (contains[i]) {
                row.verdict = "ok";
            } else {
                row.verdict = "violation";
                ++report.violations;
            }
        } else {
            ++report.checked;
            report.worst_margin = std::min(report.worst_margin, row.margin);
            row.verdict = contains[i] ? "contains" : "lacks";
        }
        report.rows.push_back(std::move(row));
    }
    finish(report, started);
    return report;
}

VerificationReport sweep_bounds(int count, int n_max, std::vector<double> p_list,
                                std::uint64_t seed, const HarnessOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (count < 0)
        throw std::invalid_argument("sweep_bounds requires count >= 0");
    if (n_max < 1 || n_max > max_vertices)
        throw std::invalid_argument("sweep_bounds requires 1 <= n_max <= 62");
    if (p_list.empty())
        throw std::invalid_argument("sweep_bounds requires at least one p");
    for (double p : p_list)
        if (!(p > 1.0))
            throw std::invalid_argument("sweep_bounds requires p > 1 throughout");
    std::sort(p_list.begin(), p_list.end());

    VerificationReport report;
    report.theorem_id = "sweep";
    report.n = n_max;
    report.p_values = p_list;

    // generate up front so results do not depend on worker scheduling
    std::mt19937_64 rng(seed);
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u)
                    g.add_edge(u, v);
        graphs.push_back(std::move(g));
    }
    report.total = count;

    struct PerGraph {
        std::vector<GraphOutcome> rows;
        long checked = 0;
        long violations = 0;
        double worst = std::numeric_limits<double>::infinity();
    };
    std::vector<PerGraph> results(graphs.size());

    parallel_for(static_cast<long>(graphs.size()), options.workers, [&](long idx) {
        std::size_t i = static_cast<std::size_t>(idx);
        const Graph& g = graphs[i];
        PerGraph& res = results[i];
        std::string g6 = write_graph6(g);
        int n = g.order();
        long long e = edge_count(g);
        int omega = clique_number(g);
        std::vector<std::pair<double, double>> lam_by_p;
        for (double p : p_list) {
            SolveResult sr = solve_lambda_p(g, p, options.solve);
            lam_by_p.emplace_back(p, sr.lambda);
            std::vector<BoundReport> checks;
            checks.push_back(check_absolute_max(n, p, sr.lambda));
            checks.push_back(check_edge_upper(e, p, sr.lambda));
            checks.push_back(check_uniform_lower(e, n, p, sr.lambda));
            auto [in0, in1] = check_clique_bounds(sr.lambda, e, n, omega, p);
            checks.push_back(in0);
            checks.push_back(in1);
            std::vector<double> simplex(sr.vector.entries.size());
            double total = 0.0;
            for (std::size_t k = 0; k < simplex.size(); ++k) {
                simplex[k] = std::pow(sr.vector.entries[k], p);
                total += simplex[k];
            }
            if (total > 0.0)
                for (auto& w : simplex)
                    w /= total;
            else
                simplex.assign(simplex.size(), 1.0 / static_cast<double>(n));
            checks.push_back(motzkin_straus_check(g, simplex, omega));

            GraphOutcome row;
            row.graph6 = g6;
            row.p = p;
            row.lambda = sr.lambda;
            double worst = std::numeric_limits<double>::infinity();
            bool bad = false;
            for (const auto& c : checks) {
                worst = std::min(worst, c.slack);
                bad = bad || c.slack < -equality_window;
            }
            row.margin = worst;
            row.verdict = bad ? "violation" : "ok";
            ++res.checked;
            res.worst = std::min(res.worst, worst);
            if (bad)
                ++res.violations;
            res.rows.push_back(std::move(row));
        }
        if (p_list.size() >= 2) {
            auto inc = check_monotone_in_p(lam_by_p, n);
            GraphOutcome row;
            row.graph6 = g6;
            row.p = 0.0;
            row.lambda = lam_by_p.back().second;
            double worst = std::numeric_limits<double>::infinity();
            bool bad = false;
            for (const auto& c : inc) {
                worst = std::min(worst, c.slack);
                bad = bad || c.slack < -equality_window;
            }
            row.margin = worst;
            row.verdict = bad ? "inc-violation" : "inc-ok";
            ++res.checked;
            res.worst = std::min(res.worst, worst);
            if (bad)
                ++res.violations;
            res.rows.push_back(std::move(row));
        }
    });

    for (auto& res : results) {
        for (auto& row : res.rows)
            report.rows.push_back(std::move(row));
        report.checked += res.checked;
        report.violations += res.violations;
        report.worst_margin = std::min(report.worst_margin, res.worst);
    }
    finish(report, started);
    return report;
}

std::string VerificationReport::to_json() const {
    std::ostringstream out;
    out << "{\"theorem_id\":\"" << json_escape(theorem_id) << "\",\"grid\":{\"n\":" << n
        << ",\"r\":" << r << ",\"t\":" << t << ",\"p\":[";
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        if (i)
            out << ',';
        out << format_double(p_values[i]);
    }
    out << "]},\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i)
            out << ',';
        out << "{\"graph6\":\"" << json_escape(row.graph6) << "\",\"p\":" << format_double(row.p)
            << ",\"lambda\":" << format_double(row.lambda)
            << ",\"margin\":" << format_double(row.margin) << ",\"verdict\":\""
            << json_escape(row.verdict) << "\"}";
    }
    out << "]";
    if (!chain.empty()) {
        out << ",\"chain\":[";
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto& link = chain[i];
            if (i)
                out << ',';
            out << "{\"r\":" << link.r << ",\"q\":" << link.q
                << ",\"margin\":" << format_double(link.margin) << ",\"verdict\":\""
                << json_escape(link.verdict) << "\"}";
        }
        out << "]";
    }
    out << ",\"summary\":{\"total\":" << total << ",\"checked\":" << checked
        << ",\"violations\":" << violations << ",\"inconclusive\":" << inconclusive
        << ",\"worst_margin\":";
    if (std::isfinite(worst_margin))
        out << format_double(worst_margin);
    else
        out << "null";
    out << "}}";
    return out.str();
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "graph6,p,lambda,margin,verdict\n";
    for (const auto& row : rows)
        out << row.graph6 << ',' << format_double(row.p) << ',' << format_double(row.lambda)
            << ',' << format_double(row.margin) << ',' << row.verdict << '\n';
    return out.str();
}

std::string VerificationReport::summary_line() const {
    std::ostringstream out;
    out << theorem_id << " n=" << n;
    if (r > 0)
        out << " r=" << r;
    if (t > 0)
        out << " t=" << t;
    out << " p=";
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        if (i)
            out << '/';
        out << format_double(p_values[i], 12);
    }
    out << ": " << total << " graphs, " << checked << " checked, " << violations
        << " violations, " << inconclusive << " inconclusive";
    if (std::isfinite(worst_margin))
        out << ", worst margin " << format_double(worst_margin, 6);
    out << ", " << format_double(elapsed_seconds, 3) << "s";
    return out.str();
}

} // namespace pspec
