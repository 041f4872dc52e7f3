#include <doctest.h>

#include "pspec/cliques.hpp"
#include "pspec/enumerate.hpp"
#include "pspec/graph.hpp"

using namespace pspec;

TEST_CASE("clique number") {
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(turan_graph(3, 9)) == 3);
    CHECK(clique_number(Graph(4)) == 1);
    CHECK(clique_number(Graph(0)) == 0);
}

TEST_CASE("clique lists and counts") {
    Graph k4 = complete_graph(4);
    CliqueList triangles = cliques_of_order(k4, 3);
    CHECK(triangles.count() == 4);
    for (const auto& c : triangles.members) {
        CHECK(c.size() == 3);
        CHECK(k4.has_edge(c[0], c[1]));
        CHECK(k4.has_edge(c[0], c[2]));
        CHECK(k4.has_edge(c[1], c[2]));
    }
    CHECK(count_cliques(k4, 2) == 6);
    CHECK(count_cliques(cycle_graph(5), 3) == 0);
    CHECK(count_cliques(turan_graph(3, 6), 3) == 8);
}

TEST_CASE("joints") {
    CHECK(joint_size(complete_graph(4), 3) == 2);
    CHECK(joint_size(cycle_graph(5), 3) == 0);
    CHECK(joint_size(complete_graph(5), 4) == 3);
    CHECK(count_cliques_on_edge(complete_graph(5), 0, 1, 3) == 3);
    CHECK(joint_size(Graph(3), 3) == 0);
    CHECK_THROWS_AS(joint_size(complete_graph(3), 2), std::invalid_argument);

    // books in K_n: every edge sits in n-2 triangles
    for (int n = 3; n <= 8; ++n)
        CHECK(joint_size(complete_graph(n), 3) == n - 2);
}

TEST_CASE("joint size is positive exactly when an r-clique exists") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (int r = 3; r <= 5; ++r) {
                bool has_clique = clique_number(g) >= r;
                CHECK((joint_size(g, r) >= 1) == has_clique);
            }
        }
    }
}
