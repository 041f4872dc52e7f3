#ifndef PSPEC_GRAPH_HPP
#define PSPEC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pspec {

// Short graph6 encoding caps the order at 62, which is far beyond anything
// the exhaustive machinery can touch anyway.
inline constexpr int max_vertices = 62;

/// Undirected simple graph on vertices 0..n-1.
/// Adjacency is kept as one 64-bit neighbor mask per vertex; the mask pair
/// (i in adj[j]) <=> (j in adj[i]) is maintained by the mutators.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const;
    int degree(int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
};

int edge_count(const Graph& g);
int min_degree(const Graph& g);
std::vector<int> neighbors(const Graph& g, int v);

/// Removes u and relabels the remaining vertices to 0..n-2, preserving their
/// relative order.
Graph delete_vertex(const Graph& g, int u);

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Complete r-partite graph of order n with part sizes as equal as possible;
/// the n mod r larger parts come first and vertices are numbered part by part.
Graph turan_graph(int r, int n);

/// Complete r-partite graph with first r-1 parts of size s and last part of
/// size t, plus one edge inside the first part (between vertices 0 and 1).
Graph kr_plus(int r, int s, int t);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

struct graph6_error : std::runtime_error {
    enum class kind { bad_header, truncated, bad_body, trailing_garbage };
    kind which;
    graph6_error(kind k, const std::string& msg)
        : std::runtime_error(msg), which(k) {}
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace pspec

#endif // PSPEC_GRAPH_HPP
