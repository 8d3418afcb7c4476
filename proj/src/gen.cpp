#include "dmst/gen.hpp"

#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "dmst/rng.hpp"

namespace dmst {

Graph gen_antilemon(Vertex k) {
    if (k < 3) throw std::invalid_argument("antilemon: k must be at least 3");
    Graph g;
    g.n = k + 1;
    g.root = k;
    g.edges.reserve(2 * static_cast<std::size_t>(k) - 1);
    for (Vertex i = 0; i + 1 < k; ++i) g.edges.push_back({i, i + 1, 0});
    for (Vertex i = 1; i < k; ++i) g.edges.push_back({i, 0, i});
    g.edges.push_back({k, 0, k});
    return g;
}

Graph gen_er_rooted(Vertex n, EdgeId m, Weight max_w, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("er-rooted: n must be positive");
    if (m < n - 1) throw std::invalid_argument("er-rooted: m must be at least n-1");
    if (max_w < 1) throw std::invalid_argument("er-rooted: max_w must be positive");

    SplitMix64 rng(seed);
    Graph g;
    g.n = n;
    g.root = 0;
    g.edges.reserve(static_cast<std::size_t>(m));

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Vertex{0});
    rng.shuffle(std::span(order).subspan(1));
    for (Vertex i = 1; i < n; ++i) {
        const auto parent = order[rng.below(static_cast<std::uint64_t>(i))];
        g.edges.push_back({parent, order[i], 0});
    }
    for (EdgeId i = n - 1; i < m; ++i) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        g.edges.push_back({u, v, 0});
    }
    rng.shuffle(std::span(g.edges));
    for (Edge& e : g.edges) e.weight = rng.uniform(1, max_w);
    return g;
}

}  // namespace dmst
