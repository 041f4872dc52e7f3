#include "pspec/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace pspec {

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;      // pattern vertices in matching order
    std::vector<int> image;      // pattern vertex -> host vertex, -1 unset
    std::uint64_t used = 0;

    bool extend(std::size_t depth) {
        if (depth == order.size())
            return true;
        int pv = order[static_cast<std::size_t>(depth)];
        int pdeg = pattern.degree(pv);
        for (int hv = 0; hv < host.order(); ++hv) {
            if ((used >> hv) & 1u)
                continue;
            if (host.degree(hv) < pdeg)
                continue;
            bool ok = true;
            for (int q : neighbors(pattern, pv)) {
                int hq = image[static_cast<std::size_t>(q)];
                if (hq >= 0 && !host.has_edge(hv, hq)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            image[static_cast<std::size_t>(pv)] = hv;
            used |= std::uint64_t{1} << hv;
            if (extend(depth + 1))
                return true;
            image[static_cast<std::size_t>(pv)] = -1;
            used &= ~(std::uint64_t{1} << hv);
        }
        return false;
    }
};

} // namespace

bool subgraph_contains(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order())
        return false;
    if (pattern.order() == 0)
        return true;
    if (edge_count(pattern) > edge_count(host))
        return false;

    // match high-degree pattern vertices first, preferring vertices with
    // already-matched neighbors so the adjacency checks bite early
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(pattern.order()), 0);
    for (int step = 0; step < pattern.order(); ++step) {
        int best = -1, best_key = -1;
        for (int v = 0; v < pattern.order(); ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            int anchored = 0;
            for (int q : neighbors(pattern, v))
                anchored += placed[static_cast<std::size_t>(q)] ? 1 : 0;
            int key = anchored * 64 + pattern.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
    }

    Matcher m{host, pattern, std::move(order),
              std::vector<int>(static_cast<std::size_t>(pattern.order()), -1), 0};
    return m.extend(0);
}

} // namespace pspec
