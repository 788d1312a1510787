#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dvote/graph.hpp"
#include "dvote/rng.hpp"

namespace dvote::testutil {

// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(v)));
        edges.insert({u, v});
    }
    int added = 0, guard = 0;
    while (added < extra_edges && guard++ < 1000) {
        int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (edges.insert({u, v}).second) ++added;
    }
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

inline std::vector<Opinion> random_bits(Rng& rng, int n) {
    std::vector<Opinion> bits(n);
    for (auto& b : bits) b = static_cast<Opinion>(rng.below(2));
    return bits;
}

}  // namespace dvote::testutil
