// pspec: command-line access to the p-spectral radius toolkit.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pspec/bounds.hpp"
#include "pspec/cliques.hpp"
#include "pspec/enumerate.hpp"
#include "pspec/format.hpp"
#include "pspec/graph.hpp"
#include "pspec/harness.hpp"
#include "pspec/procedures.hpp"
#include "pspec/solver.hpp"
#include "pspec/subgraph.hpp"

namespace {

struct GraphInput {
    std::string graph6;
    std::string graph6_file;
    std::string edge_file;
    std::vector<int> turan;  // r,n
    std::vector<int> krplus; // r,s,t

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6 string");
        cmd->add_option("--graph6-file", graph6_file, "file with one graph6 line");
        cmd->add_option("--edge-file", edge_file, "edge-list file: \"n m\" then edges");
        cmd->add_option("--turan", turan, "built-in T_r(n), as r,n")
            ->delimiter(',')
            ->expected(2);
        cmd->add_option("--krplus", krplus, "built-in K_r^+(s;t), as r,s,t")
            ->delimiter(',')
            ->expected(3);
    }

    pspec::Graph resolve() const {
        int sources = (!graph6.empty()) + (!graph6_file.empty()) + (!edge_file.empty()) +
                      (!turan.empty()) + (!krplus.empty());
        if (sources != 1)
            throw std::invalid_argument("exactly one graph input is required");
        if (!graph6.empty())
            return pspec::parse_graph6(graph6);
        if (!graph6_file.empty()) {
            std::ifstream in(graph6_file);
            if (!in)
                throw std::invalid_argument("cannot open " + graph6_file);
            std::string line;
            while (std::getline(in, line))
                if (!line.empty())
                    return pspec::parse_graph6(line);
            throw std::invalid_argument("no graph6 line in " + graph6_file);
        }
        if (!edge_file.empty()) {
            std::ifstream in(edge_file);
            if (!in)
                throw std::invalid_argument("cannot open " + edge_file);
            return pspec::read_edge_list(in);
        }
        if (!turan.empty())
            return pspec::turan_graph(turan[0], turan[1]);
        return pspec::kr_plus(krplus[0], krplus[1], krplus[2]);
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PSPEC_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 42;
}

void print_solve_human(const pspec::SolveResult& r) {
    std::cout << "lambda = " << pspec::format_double(r.lambda, 12) << '\n'
              << "residual = " << pspec::format_double(r.residual, 12) << '\n'
              << "iterations = " << r.iterations << '\n'
              << "restarts = " << r.restarts_used << '\n'
              << "status = " << pspec::to_string(r.status) << '\n';
    std::cout << "vector =";
    for (double v : r.vector.entries)
        std::cout << ' ' << pspec::format_double(v, 12);
    std::cout << '\n';
}

std::vector<pspec::BoundReport> all_bound_reports(const pspec::Graph& g, double p,
                                                  const pspec::SolveResult& sr) {
    std::vector<pspec::BoundReport> reports;
    int n = g.order();
    long long e = pspec::edge_count(g);
    int omega = pspec::clique_number(g);
    std::string label = pspec::write_graph6(g);
    reports.push_back(pspec::check_absolute_max(n, p, sr.lambda));
    reports.push_back(pspec::check_edge_upper(e, p, sr.lambda));
    reports.push_back(pspec::check_uniform_lower(e, n, p, sr.lambda));
    auto [in0, in1] = pspec::check_clique_bounds(sr.lambda, e, n, omega, p);
    reports.push_back(in0);
    reports.push_back(in1);
    std::vector<double> simplex(sr.vector.entries.size());
    double total = 0.0;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        simplex[i] = std::pow(sr.vector.entries[i], p);
        total += simplex[i];
    }
    if (total > 0.0)
        for (auto& w : simplex)
            w /= total;
    else if (n > 0)
        simplex.assign(simplex.size(), 1.0 / n);
    reports.push_back(pspec::motzkin_straus_check(g, simplex, omega));
    for (auto& rep : reports) {
        rep.context.graph = label;
        rep.context.n = n;
        if (rep.context.r == 0)
            rep.context.r = omega;
    }
    return reports;
}

int run(int argc, char** argv) {
    CLI::App app{"p-spectral radius toolkit"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();

    pspec::SolveOptions solve;
    solve.seed = default_seed();

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "solve lambda^(p) for a graph");
    GraphInput lambda_in;
    lambda_in.add_options(lambda_cmd);
    double lambda_p = 2.0;
    lambda_cmd->add_option("--p", lambda_p, "exponent p > 1")->capture_default_str();
    lambda_cmd->add_option("--restarts", solve.restarts)->capture_default_str();
    lambda_cmd->add_option("--tol", solve.tol)->capture_default_str();
    lambda_cmd->add_option("--max-iter", solve.max_iter)->capture_default_str();
    lambda_cmd->add_option("--seed", solve.seed)->capture_default_str();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "run every bound checker on a graph");
    GraphInput bounds_in;
    bounds_in.add_options(bounds_cmd);
    double bounds_p = 2.0;
    bounds_cmd->add_option("--p", bounds_p)->capture_default_str();

    // turan
    auto* turan_cmd = app.add_subcommand("turan", "construct T_r(n) or K_r^+(s;t) as graph6");
    int turan_r = 0, turan_n = 0, turan_s = 0, turan_t = 0;
    turan_cmd->add_option("--r", turan_r, "number of parts")->required();
    turan_cmd->add_option("--n", turan_n, "order of T_r(n)");
    turan_cmd->add_option("--s", turan_s, "first-part size of K_r^+(s;t)");
    turan_cmd->add_option("--t", turan_t, "last-part size of K_r^+(s;t), defaults to s");

    // joints
    auto* joints_cmd = app.add_subcommand("joints", "maximum joint size js_r");
    GraphInput joints_in;
    joints_in.add_options(joints_cmd);
    int joints_r = 3;
    joints_cmd->add_option("--r", joints_r)->capture_default_str();

    // symmetrize
    auto* sym_cmd = app.add_subcommand("symmetrize", "complete multipartite dominating graph");
    GraphInput sym_in;
    sym_in.add_options(sym_cmd);
    double sym_p = 2.0;
    sym_cmd->add_option("--p", sym_p)->capture_default_str();
    sym_cmd->add_option("--seed", solve.seed);

    // extract
    auto* extract_cmd = app.add_subcommand("extract", "dense-subgraph extraction trace");
    GraphInput extract_in;
    extract_in.add_options(extract_cmd);
    pspec::ExtractionParams params;
    extract_cmd->add_option("--p", params.p)->capture_default_str();
    extract_cmd->add_option("--A", params.A)->capture_default_str();
    extract_cmd->add_option("--gamma", params.gamma)->capture_default_str();
    extract_cmd->add_option("--R", params.R)->capture_default_str();
    extract_cmd->add_option("--seed", solve.seed);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string theorem;
    verify_cmd->add_option("--theorem", theorem, "tur | clique | saturation | krplus | sweep")
        ->required()
        ->check(CLI::IsMember({"tur", "clique", "saturation", "krplus", "sweep"}));
    int v_n = 5, v_r = 2, v_t = 1, v_count = 1000, v_nmax = 12, v_workers = 1;
    double v_p = 2.0;
    std::vector<double> v_plist = {1.1, 1.5, 2.0, 3.0, 10.0};
    std::uint64_t v_seed = default_seed();
    std::string v_file;
    verify_cmd->add_option("--n", v_n)->capture_default_str();
    verify_cmd->add_option("--r", v_r)->capture_default_str();
    verify_cmd->add_option("--p", v_p)->capture_default_str();
    verify_cmd->add_option("--t", v_t)->capture_default_str();
    verify_cmd->add_option("--count", v_count, "random graphs for sweep")->capture_default_str();
    verify_cmd->add_option("--nmax", v_nmax, "max order for sweep")->capture_default_str();
    verify_cmd->add_option("--plist", v_plist, "p grid for sweep")->delimiter(',');
    verify_cmd->add_option("--seed", v_seed)->capture_default_str();
    verify_cmd->add_option("--workers", v_workers)->capture_default_str();
    verify_cmd->add_option("--g6-file", v_file, "external graph6 corpus");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "stream one graph6 line per class");
    int enum_n = 5, enum_forbid = 0;
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--forbid-clique", enum_forbid,
                         "keep only K_q-free graphs for this q");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (lambda_cmd->parsed()) {
        pspec::Graph g = lambda_in.resolve();
        pspec::SolveResult r = pspec::solve_lambda_p(g, lambda_p, solve);
        if (format == "json")
            std::cout << pspec::to_json(r) << '\n';
        else
            print_solve_human(r);
        return 0;
    }

    if (bounds_cmd->parsed()) {
        pspec::Graph g = bounds_in.resolve();
        pspec::SolveResult sr = pspec::solve_lambda_p(g, bounds_p, solve);
        auto reports = all_bound_reports(g, bounds_p, sr);
        bool all_pass = true;
        if (format == "csv")
            std::cout << pspec::bound_csv_header() << '\n';
        for (const auto& rep : reports) {
            all_pass = all_pass && rep.pass;
            if (format == "csv") {
                std::cout << pspec::to_csv_row(rep) << '\n';
            } else if (format == "json") {
                std::cout << "{\"bound\":\"" << rep.bound_id
                          << "\",\"lhs\":" << pspec::format_double(rep.lhs)
                          << ",\"rhs\":" << pspec::format_double(rep.rhs)
                          << ",\"slack\":" << pspec::format_double(rep.slack)
                          << ",\"pass\":" << (rep.pass ? "true" : "false") << "}\n";
            } else {
                std::cout << rep.bound_id << ": lhs " << pspec::format_double(rep.lhs, 12)
                          << "  rhs " << pspec::format_double(rep.rhs, 12) << "  slack "
                          << pspec::format_double(rep.slack, 12)
                          << (rep.pass ? "  pass" : "  FAIL") << '\n';
            }
        }
        return all_pass ? 0 : 1;
    }

    if (turan_cmd->parsed()) {
        pspec::Graph g = turan_s > 0
                             ? pspec::kr_plus(turan_r, turan_s, turan_t > 0 ? turan_t : turan_s)
                             : pspec::turan_graph(turan_r, turan_n);
        std::cout << pspec::write_graph6(g) << '\n';
        return 0;
    }

    if (joints_cmd->parsed()) {
        pspec::Graph g = joints_in.resolve();
        std::cout << pspec::joint_size(g, joints_r) << '\n';
        return 0;
    }

    if (sym_cmd->parsed()) {
        pspec::Graph g = sym_in.resolve();
        pspec::SolveResult sr = pspec::solve_lambda_p(g, sym_p, solve);
        pspec::Graph h = pspec::symmetrize(g, sr.vector);
        pspec::SolveResult hr = pspec::solve_lambda_p(h, sym_p, solve);
        if (format == "json") {
            std::cout << "{\"graph6\":\"" << pspec::json_escape(pspec::write_graph6(h))
                      << "\",\"lambda_input\":" << pspec::format_double(sr.lambda)
                      << ",\"lambda_output\":" << pspec::format_double(hr.lambda) << "}\n";
        } else {
            std::cout << pspec::write_graph6(h) << '\n'
                      << "lambda " << pspec::format_double(sr.lambda, 12) << " -> "
                      << pspec::format_double(hr.lambda, 12) << '\n';
        }
        return 0;
    }

    if (extract_cmd->parsed()) {
        pspec::Graph g = extract_in.resolve();
        auto [h, trace] = params.p > 2.0
                              ? pspec::extract_with_p_reduction(g, params, solve)
                              : pspec::extract_dense_subgraph(g, params, solve);
        if (format == "json") {
            std::cout << trace.to_json() << '\n';
        } else {
            std::cout << "steps " << trace.steps.size() << ", final order "
                      << trace.final_order << ", graph6 " << pspec::write_graph6(h) << '\n';
            std::cout << "c1 " << pspec::to_string(trace.c1) << ", c2 "
                      << pspec::to_string(trace.c2) << ", c3 " << pspec::to_string(trace.c3)
                      << '\n';
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        pspec::HarnessOptions opts;
        opts.workers = v_workers;
        opts.solve = solve;
        opts.graph6_file = v_file;
        pspec::VerificationReport report;
        if (theorem == "tur")
            report = pspec::verify_turan_extremal(v_n, v_r, v_p, opts);
        else if (theorem == "clique")
            report = pspec::verify_clique_reformulation(v_n, v_p, opts);
        else if (theorem == "saturation")
            report = pspec::verify_saturation_desk(v_n, v_r, v_p, opts);
        else if (theorem == "krplus")
            report = pspec::verify_kr_plus_presence(v_n, v_r, v_p, v_t, opts);
        else
            report = pspec::sweep_bounds(v_count, v_nmax, v_plist, v_seed, opts);
        if (format == "json") {
            std::cout << report.to_json() << '\n';
        } else if (format == "csv") {
            std::cout << report.to_csv();
        } else {
            std::cout << report.summary_line() << '\n';
            for (const auto& row : report.rows)
                if (row.verdict == "maximizer" || row.verdict == "violation" ||
                    row.verdict == "inconclusive")
                    std::cout << "  " << row.verdict << ' ' << row.graph6 << " lambda "
                              << pspec::format_double(row.lambda, 12) << '\n';
        }
        return report.passed() ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
        auto pred = enum_forbid > 0
                        ? std::function<bool(const pspec::Graph&)>(
                              [q = enum_forbid](const pspec::Graph& g) {
                                  return pspec::clique_number(g) < q;
                              })
                        : std::function<bool(const pspec::Graph&)>();
        for (const auto& g : pspec::enumerate_graphs(enum_n, pred))
            std::cout << pspec::write_graph6(g) << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
