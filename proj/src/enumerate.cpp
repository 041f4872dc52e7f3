#include "pspec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <set>

namespace pspec {

namespace {

constexpr int canon_max = 11; // 55 pair bits fit a 64-bit mask

int pair_bits(int n) { return n * (n - 1) / 2; }

// integer value of the j-bit column at depth j inside a packed mask
std::uint64_t column_of(std::uint64_t mask, int total_bits, int j) {
    int tj = j * (j - 1) / 2;
    return (mask >> (total_bits - tj - j)) & ((std::uint64_t{1} << j) - 1);
}

struct CanonSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best = 0;
    bool have_best = false;
    std::array<int, canon_max> placed{};
    std::uint64_t used = 0;
    std::uint64_t cur = 0;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.order()), total_bits(pair_bits(graph.order())) {}

    bool twin(int v, int w) const {
        std::uint64_t bv = std::uint64_t{1} << v;
        std::uint64_t bw = std::uint64_t{1} << w;
        return (g.neighbor_mask(v) & ~bw) == (g.neighbor_mask(w) & ~bv);
    }

    void dfs(int depth, bool tight) {
        if (depth == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        // column bits of candidate v against the placed prefix, i = 0 most
        // significant so that smaller columns sort lexicographically first
        std::array<std::uint64_t, canon_max> col{};
        std::uint64_t cmin = ~std::uint64_t{0};
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u)
                continue;
            std::uint64_t c = 0;
            for (int i = 0; i < depth; ++i)
                c = (c << 1) | (g.has_edge(placed[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            col[static_cast<std::size_t>(v)] = c;
            cmin = std::min(cmin, c);
        }
        bool child_tight = false;
        if (tight) {
            std::uint64_t bc = column_of(best, total_bits, depth);
            if (cmin > bc)
                return;
            child_tight = (cmin == bc);
        }
        int tj = depth * (depth - 1) / 2;
        int shift = total_bits - tj - depth;
        std::array<int, canon_max> chosen{};
        int chosen_count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u)
                continue;
            if (col[static_cast<std::size_t>(v)] != cmin)
                continue;
            bool duplicate = false;
            for (int k = 0; k < chosen_count && !duplicate; ++k)
                duplicate = twin(chosen[static_cast<std::size_t>(k)], v);
            if (duplicate)
                continue;
            chosen[static_cast<std::size_t>(chosen_count++)] = v;

            placed[static_cast<std::size_t>(depth)] = v;
            used |= std::uint64_t{1} << v;
            std::uint64_t saved = cur;
            if (depth > 0)
                cur |= cmin << shift;
            dfs(depth + 1, child_tight);
            cur = saved;
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

// every class on n vertices arises from a class on n-1 vertices by gluing
// one vertex onto some neighborhood subset
std::vector<std::uint64_t> augment(const std::vector<std::uint64_t>& prev, int n) {
    std::set<std::uint64_t> out;
    std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask : prev) {
        Graph base = graph_from_pair_mask(n - 1, mask);
        for (std::uint64_t sub = 0; sub < subsets; ++sub) {
            Graph g(n);
            for (auto [u, v] : base.edges())
                g.add_edge(u, v);
            for (int v = 0; v < n - 1; ++v)
                if ((sub >> v) & 1u)
                    g.add_edge(v, n - 1);
            out.insert(canonical_mask(g));
        }
    }
    return {out.begin(), out.end()};
}

const std::vector<std::uint64_t>& cached_masks(int n) {
    static std::mutex mtx;
    static std::array<std::vector<std::uint64_t>, 8> cache;
    static int built = 0;
    std::lock_guard<std::mutex> lock(mtx);
    if (built == 0) {
        cache[1] = {0};
        built = 1;
    }
    while (built < n) {
        cache[static_cast<std::size_t>(built + 1)] =
            augment(cache[static_cast<std::size_t>(built)], built + 1);
        ++built;
    }
    return cache[static_cast<std::size_t>(n)];
}

bool bijection_search(const Graph& a, const Graph& b, std::vector<int>& image,
                      std::uint64_t used, int depth) {
    if (depth == a.order())
        return true;
    for (int hv = 0; hv < b.order(); ++hv) {
        if ((used >> hv) & 1u)
            continue;
        if (b.degree(hv) != a.degree(depth))
            continue;
        bool ok = true;
        for (int q = 0; q < depth && ok; ++q)
            ok = (a.has_edge(depth, q) == b.has_edge(hv, image[static_cast<std::size_t>(q)]));
        if (!ok)
            continue;
        image[static_cast<std::size_t>(depth)] = hv;
        if (bijection_search(a, b, image, used | (std::uint64_t{1} << hv), depth + 1))
            return true;
    }
    return false;
}

} // namespace

std::uint64_t pair_mask(const Graph& g) {
    int n = g.order();
    if (n > canon_max)
        throw std::invalid_argument("pair_mask supports at most 11 vertices");
    int total = pair_bits(n);
    std::uint64_t mask = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j))
                mask |= std::uint64_t{1} << (total - 1 - k);
    return mask;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    if (n > canon_max)
        throw std::invalid_argument("graph_from_pair_mask supports at most 11 vertices");
    int total = pair_bits(n);
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> (total - 1 - k)) & 1u)
                g.add_edge(i, j);
    return g;
}

std::uint64_t canonical_mask(const Graph& g) {
    if (g.order() > canon_max)
        throw std::invalid_argument("canonical_mask supports at most 11 vertices");
    if (g.order() <= 1)
        return 0;
    CanonSearch search(g);
    search.dfs(0, false);
    return search.best;
}

Graph canonical_form(const Graph& g) {
    return graph_from_pair_mask(g.order(), canonical_mask(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order())
        return false;
    if (edge_count(a) != edge_count(b))
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    if (a.order() <= canon_max)
        return canonical_mask(a) == canonical_mask(b);
    std::vector<int> image(static_cast<std::size_t>(a.order()), -1);
    return bijection_search(a, b, image, 0, 0);
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& pred) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("built-in enumeration supports 1 <= n <= 7");
    std::vector<Graph> out;
    for (std::uint64_t mask : cached_masks(n)) {
        Graph g = graph_from_pair_mask(n, mask);
        if (!pred || pred(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace pspec
