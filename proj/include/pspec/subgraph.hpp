#ifndef PSPEC_SUBGRAPH_HPP
#define PSPEC_SUBGRAPH_HPP

#include "pspec/graph.hpp"

namespace pspec {

/// Non-induced subgraph containment: true iff some injective vertex map
/// carries every pattern edge to a host edge. Backtracking with degree
/// pruning; pattern non-edges impose no constraint.
bool subgraph_contains(const Graph& host, const Graph& pattern);

} // namespace pspec

#endif // PSPEC_SUBGRAPH_HPP
