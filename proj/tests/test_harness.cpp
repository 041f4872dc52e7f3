#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pspec/enumerate.hpp"
#include "pspec/graph.hpp"
#include "pspec/harness.hpp"
#include "pspec/solver.hpp"

using namespace pspec;

TEST_CASE("turan extremal verification on four vertices") {
    VerificationReport rep = verify_turan_extremal(4, 2, 2.0);
    CHECK(rep.total == 7); // triangle-free classes on four vertices
    CHECK(rep.passed());
    CHECK(rep.worst_margin > 1e-7);

    std::string c4 = write_graph6(canonical_form(cycle_graph(4)));
    bool saw_maximizer = false;
    for (const auto& row : rep.rows) {
        if (row.verdict == "maximizer") {
            saw_maximizer = true;
            CHECK(row.graph6 == c4);
            CHECK(row.lambda == doctest::Approx(2.0));
        }
    }
    CHECK(saw_maximizer);
}

TEST_CASE("turan extremal verification on five vertices") {
    VerificationReport rep = verify_turan_extremal(5, 2, 2.0);
    CHECK(rep.passed());
    for (const auto& row : rep.rows)
        if (row.verdict == "maximizer")
            CHECK(row.lambda == doctest::Approx(std::sqrt(6.0)));

    // r >= n-1 admits every graph and K_n wins
    VerificationReport all = verify_turan_extremal(5, 5, 2.0);
    CHECK(all.passed());
    for (const auto& row : all.rows)
        if (row.verdict == "maximizer")
            CHECK(row.lambda == doctest::Approx(4.0));
}

TEST_CASE("turan chain ordering holds through n = 7") {
    SolveOptions opts;
    for (int n = 3; n <= 7; ++n) {
        for (double p : {1.5, 2.0, 3.0}) {
            std::vector<double> lam(static_cast<std::size_t>(n) + 1, 0.0);
            for (int r = 2; r <= n; ++r)
                lam[static_cast<std::size_t>(r)] =
                    solve_lambda_p(turan_graph(r, n), p, opts).lambda;
            for (int r = 3; r <= n; ++r)
                for (int q = 2; q < r; ++q)
                    CHECK(lam[static_cast<std::size_t>(r)] >
                          lam[static_cast<std::size_t>(q)] + 1e-7);
        }
    }
}

TEST_CASE("external corpus may exceed the built-in enumeration range") {
    std::string path = "tmp_corpus_n8.g6";
    {
        std::ofstream out(path);
        out << write_graph6(turan_graph(2, 8)) << '\n';
        out << write_graph6(cycle_graph(8)) << '\n';
        out << write_graph6(turan_graph(2, 8)) << '\n'; // duplicate is harmless
        Graph path8(8);
        for (int v = 0; v + 1 < 8; ++v)
            path8.add_edge(v, v + 1);
        out << write_graph6(path8) << '\n';
    }
    HarnessOptions opts;
    opts.graph6_file = path;
    VerificationReport rep = verify_turan_extremal(8, 2, 2.0, opts);
    CHECK(rep.passed());
    bool saw_maximizer = false;
    for (const auto& row : rep.rows)
        if (row.verdict == "maximizer") {
            saw_maximizer = true;
            CHECK(row.lambda == doctest::Approx(4.0)); // K_{4,4}
        }
    CHECK(saw_maximizer);
    std::remove(path.c_str());
}

TEST_CASE("turan extremal accepts an external graph6 corpus") {
    std::string path = "tmp_corpus_test.g6";
    {
        std::ofstream out(path);
        for (const Graph& g : enumerate_graphs(4))
            out << write_graph6(g) << '\n';
    }
    HarnessOptions opts;
    opts.graph6_file = path;
    VerificationReport from_file = verify_turan_extremal(4, 2, 2.0, opts);
    VerificationReport builtin = verify_turan_extremal(4, 2, 2.0);
    CHECK(from_file.to_json() == builtin.to_json());
    std::remove(path.c_str());
}

TEST_CASE("clique reformulation with the turan chain") {
    VerificationReport rep = verify_clique_reformulation(5, 2.0);
    CHECK(rep.total == 34);
    CHECK(rep.passed());
    CHECK_FALSE(rep.chain.empty());
    for (const auto& link : rep.chain) {
        CHECK(link.verdict == "ok");
        CHECK(link.margin > 1e-7);
    }

    VerificationReport rep6 = verify_clique_reformulation(6, 2.0);
    CHECK(rep6.passed());
    // lambda(T_2(6)) = 3 < lambda(T_3(6)) = 4 < lambda(T_6(6)) = 5
    for (const auto& link : rep6.chain) {
        if (link.r == 3 && link.q == 2)
            CHECK(link.margin == doctest::Approx(1.0).epsilon(1e-8));
        if (link.r == 6 && link.q == 3)
            CHECK(link.margin == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("saturation verification at five vertices") {
    VerificationReport rep = verify_saturation_desk(5, 2, 2.0);
    CHECK(rep.passed());
    CHECK(rep.total == 34);
    bool saw_over = false;
    for (const auto& row : rep.rows)
        if (row.verdict.rfind("ok", 0) == 0)
            saw_over = true;
    CHECK(saw_over); // K_5 itself beats T_2(5)
}

TEST_CASE("kr-plus presence asserts the forced triangle") {
    VerificationReport rep = verify_kr_plus_presence(5, 2, 2.0, 1);
    CHECK(rep.passed());
    bool saw_ok = false;
    for (const auto& row : rep.rows) {
        CHECK(row.verdict != "violation");
        if (row.verdict == "ok")
            saw_ok = true;
    }
    CHECK(saw_ok);

    // t = 2 is observational: no verdict may be a violation
    VerificationReport rep2 = verify_kr_plus_presence(6, 2, 2.0, 2);
    CHECK(rep2.passed());
    bool saw_report = false;
    for (const auto& row : rep2.rows)
        if (row.verdict == "contains" || row.verdict == "lacks")
            saw_report = true;
    CHECK(saw_report);
}

TEST_CASE("bound sweep runs clean and deterministically") {
    HarnessOptions one;
    one.workers = 1;
    HarnessOptions four;
    four.workers = 4;
    VerificationReport a = sweep_bounds(60, 10, {1.5, 2.0, 3.0}, 42, one);
    VerificationReport b = sweep_bounds(60, 10, {1.5, 2.0, 3.0}, 42, four);
    CHECK(a.passed());
    CHECK(a.worst_margin >= -1e-9);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv() == b.to_csv());

    VerificationReport c = sweep_bounds(60, 10, {1.5, 2.0, 3.0}, 42, one);
    CHECK(a.to_json() == c.to_json());

    VerificationReport empty = sweep_bounds(0, 10, {2.0}, 42);
    CHECK(empty.passed());
    CHECK(empty.total == 0);
}

TEST_CASE("worker count does not change verification output") {
    HarnessOptions one;
    one.workers = 1;
    HarnessOptions four;
    four.workers = 4;
    CHECK(verify_turan_extremal(5, 2, 2.0, one).to_json() ==
          verify_turan_extremal(5, 2, 2.0, four).to_json());
    CHECK(verify_saturation_desk(5, 2, 1.5, one).to_json() ==
          verify_saturation_desk(5, 2, 1.5, four).to_json());
}

TEST_CASE("report serialization shape") {
    VerificationReport rep = verify_turan_extremal(4, 2, 2.0);
    std::string json = rep.to_json();
    CHECK(json.find("\"theorem_id\":\"tur\"") != std::string::npos);
    CHECK(json.find("\"rows\":[") != std::string::npos);
    CHECK(json.find("\"summary\":{") != std::string::npos);
    CHECK(json.find("elapsed") == std::string::npos);

    std::string csv = rep.to_csv();
    CHECK(csv.rfind("graph6,p,lambda,margin,verdict\n", 0) == 0);

    CHECK(rep.summary_line().find("tur") != std::string::npos);
}

TEST_CASE("sweep rejects bad arguments") {
    CHECK_THROWS_AS(sweep_bounds(10, 0, {2.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_bounds(10, 5, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_bounds(10, 5, {1.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep_bounds(-1, 5, {2.0}, 1), std::invalid_argument);
}
