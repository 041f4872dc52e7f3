#ifndef PSPEC_ENUMERATE_HPP
#define PSPEC_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pspec/graph.hpp"

namespace pspec {

/// Upper-triangle adjacency bits in graph6 stream order, packed so that the
/// first stream bit is the most significant; integer order on masks equals
/// lexicographic order on graph6 bit bodies. Requires n <= 11 (55 bits).
std::uint64_t pair_mask(const Graph& g);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// Minimum of pair_mask over all vertex permutations. Requires n <= 11.
std::uint64_t canonical_mask(const Graph& g);
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class on n vertices
/// (n <= 7 built in), in ascending canonical-mask order, filtered by the
/// predicate when one is given.
std::vector<Graph> enumerate_graphs(int n,
                                    const std::function<bool(const Graph&)>& pred = {});

} // namespace pspec

#endif // PSPEC_ENUMERATE_HPP
