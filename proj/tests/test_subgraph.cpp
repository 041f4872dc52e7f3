#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "pspec/enumerate.hpp"
#include "pspec/graph.hpp"
#include "pspec/subgraph.hpp"

using namespace pspec;

namespace {

// oracle: try every injective map host-side, no pruning
bool contains_by_enumeration(const Graph& host, const Graph& pattern) {
    int hn = host.order(), pn = pattern.order();
    if (pn > hn)
        return false;
    std::vector<int> pick(static_cast<std::size_t>(hn));
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<int> sel(static_cast<std::size_t>(pn));
    std::function<bool(int)> choose = [&](int depth) -> bool {
        if (depth == pn) {
            std::vector<int> perm = sel;
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (int a = 0; a < pn && ok; ++a)
                    for (int b = a + 1; b < pn && ok; ++b)
                        if (pattern.has_edge(a, b) && !host.has_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
                            ok = false;
                if (ok)
                    return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = (depth == 0 ? 0 : sel[static_cast<std::size_t>(depth - 1)] + 1); v < hn; ++v) {
            sel[static_cast<std::size_t>(depth)] = v;
            if (choose(depth + 1))
                return true;
        }
        return false;
    };
    return choose(0);
}

} // namespace

TEST_CASE("containment basics") {
    CHECK(subgraph_contains(complete_graph(4), complete_graph(3)));
    CHECK_FALSE(subgraph_contains(cycle_graph(5), complete_graph(3)));
    CHECK(subgraph_contains(kr_plus(2, 2, 2), complete_graph(3)));
    CHECK(subgraph_contains(complete_graph(3), Graph(0)));
    CHECK_FALSE(subgraph_contains(complete_graph(3), complete_graph(4)));
    // non-induced: C_4 contains P_3 but not K_3
    CHECK(subgraph_contains(cycle_graph(4), path_graph(3)));
    CHECK_FALSE(subgraph_contains(cycle_graph(4), complete_graph(3)));
}

TEST_CASE("containment agrees with brute-force enumeration") {
    std::vector<Graph> patterns;
    for (int pn = 1; pn <= 4; ++pn)
        for (const Graph& p : enumerate_graphs(pn))
            patterns.push_back(p);

    for (int hn = 1; hn <= 5; ++hn) {
        for (const Graph& host : enumerate_graphs(hn)) {
            for (const Graph& p : patterns) {
                CHECK(subgraph_contains(host, p) == contains_by_enumeration(host, p));
            }
        }
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph host(7);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (rng() & 1u)
                    host.add_edge(u, v);
        for (const Graph& p : patterns)
            CHECK(subgraph_contains(host, p) == contains_by_enumeration(host, p));
    }
}
