#include "pspec/cliques.hpp"

#include <algorithm>
#include <bit>

namespace pspec {

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P | X with the most neighbors in P, lowest index on ties
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int cnt = std::popcount(p & g.neighbor_mask(v));
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t candidates = p & ~g.neighbor_mask(pivot);
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint64_t nv = g.neighbor_mask(v);
        bron_kerbosch(g, r | bit, p & nv, x & nv, out);
        p &= ~bit;
        x |= bit;
    }
}

void count_cliques_in(const Graph& g, std::uint64_t candidates, int size, long long& total) {
    if (size == 0) {
        ++total;
        return;
    }
    if (std::popcount(candidates) < size)
        return;
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m);
        // keep only higher-indexed candidates to count each clique once
        std::uint64_t rest = candidates & g.neighbor_mask(v) & ~((std::uint64_t{2} << v) - 1);
        count_cliques_in(g, rest, size - 1, total);
    }
}

void list_cliques_in(const Graph& g, std::uint64_t candidates, int size,
                     std::vector<int>& stack, std::vector<std::vector<int>>& out) {
    if (size == 0) {
        out.push_back(stack);
        return;
    }
    if (std::popcount(candidates) < size)
        return;
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t rest = candidates & g.neighbor_mask(v) & ~((std::uint64_t{2} << v) - 1);
        stack.push_back(v);
        list_cliques_in(g, rest, size - 1, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
    std::vector<std::uint64_t> out;
    if (g.order() == 0)
        return out;
    std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
    bron_kerbosch(g, 0, all, 0, out);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb)
            return pa > pb;
        return a < b;
    });
    return out;
}

int clique_number(const Graph& g) {
    if (g.order() == 0)
        return 0;
    auto cliques = maximal_cliques(g);
    int best = 1;
    for (std::uint64_t c : cliques)
        best = std::max(best, std::popcount(c));
    return best;
}

CliqueList cliques_of_order(const Graph& g, int r) {
    if (r < 1)
        throw std::invalid_argument("clique order must be positive");
    CliqueList list;
    list.r = r;
    if (g.order() == 0)
        return list;
    std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
    std::vector<int> stack;
    list_cliques_in(g, all, r, stack, list.members);
    return list;
}

long long count_cliques(const Graph& g, int r) {
    if (r < 1)
        throw std::invalid_argument("clique order must be positive");
    if (g.order() == 0)
        return 0;
    std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
    long long total = 0;
    count_cliques_in(g, all, r, total);
    return total;
}

long long count_cliques_on_edge(const Graph& g, int u, int v, int r) {
    if (r < 3)
        throw std::invalid_argument("count_cliques_on_edge requires r >= 3");
    if (!g.has_edge(u, v))
        return 0;
    std::uint64_t common = g.neighbor_mask(u) & g.neighbor_mask(v);
    long long total = 0;
    count_cliques_in(g, common, r - 2, total);
    return total;
}

long long joint_size(const Graph& g, int r) {
    if (r < 3)
        throw std::invalid_argument("joint_size requires r >= 3");
    long long best = 0;
    for (auto [u, v] : g.edges())
        best = std::max(best, count_cliques_on_edge(g, u, v, r));
    return best;
}

} // namespace pspec
