#include "pspec/graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace pspec {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order must be between 0 and 62");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[static_cast<std::size_t>(u)] >> v) & 1u)
                out.emplace_back(u, v);
    return out;
}

int edge_count(const Graph& g) {
    int twice = 0;
    for (int v = 0; v < g.order(); ++v)
        twice += g.degree(v);
    return twice / 2;
}

int min_degree(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("min_degree of the empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

std::vector<int> neighbors(const Graph& g, int v) {
    std::vector<int> out;
    std::uint64_t m = g.neighbor_mask(v);
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Graph delete_vertex(const Graph& g, int u) {
    if (u < 0 || u >= g.order())
        throw std::out_of_range("vertex index out of range");
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(g.order()) - 1);
    for (int v = 0; v < g.order(); ++v)
        if (v != u)
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            if (g.has_edge(keep[a], keep[b]))
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return h;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((keep_mask >> v) & 1u)
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph turan_graph(int r, int n) {
    if (r < 1 || n < 1)
        throw std::invalid_argument("turan_graph requires r >= 1 and n >= 1");
    if (r > max_vertices || n > max_vertices)
        throw std::invalid_argument("turan_graph order exceeds 62");
    int small = n / r;
    int t = n % r;
    // part v belongs to, numbered part by part with the t larger parts first
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (int i = 0; i < r && v < n; ++i) {
        int size = small + (i < t ? 1 : 0);
        for (int j = 0; j < size; ++j)
            part[static_cast<std::size_t>(v++)] = i;
    }
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)])
                g.add_edge(a, b);
    return g;
}

Graph kr_plus(int r, int s, int t) {
    if (r < 2)
        throw std::invalid_argument("kr_plus requires r >= 2");
    if (s < 2)
        throw std::invalid_argument("kr_plus requires s >= 2");
    if (t < 1)
        throw std::invalid_argument("kr_plus requires t >= 1");
    int n = (r - 1) * s + t;
    if (n > max_vertices)
        throw std::invalid_argument("kr_plus order exceeds 62");
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < s; ++j)
            part[static_cast<std::size_t>(v++)] = i;
    for (int j = 0; j < t; ++j)
        part[static_cast<std::size_t>(v++)] = r - 1;
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)])
                g.add_edge(a, b);
    g.add_edge(0, 1);
    return g;
}

Graph complete_graph(int n) { return turan_graph(n, n); }

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_graph requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("path_graph requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph parse_graph6(std::string_view text) {
    using kind = graph6_error::kind;
    if (text.empty())
        throw graph6_error(kind::bad_header, "graph6: empty input");
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126)
        throw graph6_error(kind::bad_header, "graph6: long form not supported (n > 62)");
    if (h < 63 || h > 125)
        throw graph6_error(kind::bad_header, "graph6: header byte out of range");
    int n = static_cast<int>(h) - 63;
    int bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - 1 < body)
        throw graph6_error(kind::truncated, "graph6: truncated bit body");
    if (text.size() - 1 > body)
        throw graph6_error(kind::trailing_garbage, "graph6: trailing garbage after bit body");
    Graph g(n);
    int k = 0;
    for (std::size_t c = 0; c < body; ++c) {
        unsigned char b = static_cast<unsigned char>(text[1 + c]);
        if (b < 63 || b > 126)
            throw graph6_error(kind::bad_body, "graph6: body byte out of range");
        int val = static_cast<int>(b) - 63;
        for (int bit = 5; bit >= 0 && k < bits; --bit, ++k) {
            if ((val >> bit) & 1) {
                // stream position k enumerates pairs (i, j) column by column
                int j = 1;
                while ((j + 1) * j / 2 <= k)
                    ++j;
                int i = k - j * (j - 1) / 2;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bits = n * (n - 1) / 2;
    int val = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(val + 63));
                val = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        val <<= 6 - bits % 6;
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m))
        throw std::invalid_argument("edge list: expected header line \"n m\"");
    if (n < 0 || n > max_vertices || m < 0)
        throw std::invalid_argument("edge list: header out of range");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: truncated edge lines");
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        out << u << ' ' << v << '\n';
}

} // namespace pspec
