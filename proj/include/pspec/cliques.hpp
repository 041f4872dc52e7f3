#ifndef PSPEC_CLIQUES_HPP
#define PSPEC_CLIQUES_HPP

#include <cstdint>
#include <vector>

#include "pspec/graph.hpp"

namespace pspec {

/// All r-cliques of a graph, each as a sorted vertex list.
struct CliqueList {
    int r = 0;
    std::vector<std::vector<int>> members;

    long long count() const { return static_cast<long long>(members.size()); }
};

/// Maximal cliques as vertex masks, Bron-Kerbosch with pivoting,
/// sorted by (size descending, mask ascending).
std::vector<std::uint64_t> maximal_cliques(const Graph& g);

/// Clique number; 1 for edgeless nonempty graphs, 0 for the empty graph.
int clique_number(const Graph& g);

CliqueList cliques_of_order(const Graph& g, int r);
long long count_cliques(const Graph& g, int r);

/// Number of r-cliques containing the edge {u, v}; requires r >= 3.
long long count_cliques_on_edge(const Graph& g, int u, int v, int r);

/// js_r(G): maximum number of r-cliques sharing one edge, 0 when no
/// r-clique exists; requires r >= 3.
long long joint_size(const Graph& g, int r);

} // namespace pspec

#endif // PSPEC_CLIQUES_HPP
