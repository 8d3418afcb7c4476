#pragma once

#include <vector>

#include "dmst/graph.hpp"
#include "dmst/rng.hpp"

namespace dmst::testing {

inline Graph g_one() { return {1, 0, {}}; }

inline Graph g_bad() { return {2, 0, {}}; }

inline Graph g_tri() { return {3, 0, {{0, 1, 5}, {0, 2, 7}, {1, 2, 1}, {2, 1, 1}}}; }

inline Graph g_cyc() { return {3, 0, {{1, 2, 1}, {2, 1, 1}, {0, 1, 10}, {0, 2, 10}}}; }

/// Uniformly random multigraph (self-loops and parallel edges included) with
/// 1..max_n vertices, 0..max_m edges, a random root and weights in [lo, hi].
inline Graph random_graph(SplitMix64& rng, Vertex max_n, EdgeId max_m, Weight lo, Weight hi) {
    Graph g;
    g.n = static_cast<Vertex>(rng.uniform(1, max_n));
    g.root = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n)));
    const auto m = static_cast<EdgeId>(rng.uniform(0, max_m));
    for (EdgeId i = 0; i < m; ++i) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n)));
        g.edges.push_back({u, v, rng.uniform(lo, hi)});
    }
    return g;
}

}  // namespace dmst::testing
