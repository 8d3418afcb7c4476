#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dmst/active_forest.hpp"
#include "dmst/dsu.hpp"
#include "dmst/queues.hpp"
#include "dmst/rng.hpp"

namespace dmst::testing {

struct ForestSequenceStats {
    std::uint64_t queries = 0;
    std::uint64_t checks = 0;
};

/// Drives an ActiveForest the way the growth path does: super-vertices carry
/// a position (larger = closer to the head), replace only moves a node closer
/// or re-keys it in place to a smaller (cost, edge id), and merges take a suffix of the positions
/// after shifting all of it by one common delta. After every operation the
/// forest invariants are checked, and every query on the head is compared to
/// a linear scan over the live nodes whose home is the head.
/// Returns an empty string on success, otherwise the first failure.
inline std::string run_forest_sequence(std::uint64_t seed, int ops, ForestSequenceStats* stats = nullptr) {
    SplitMix64 rng(seed);
    const auto n = static_cast<Vertex>(rng.uniform(2, 32));
    constexpr int kEdgesPerTarget = 6;

    std::vector<Edge> edges;
    for (Vertex t = 0; t < n; ++t) {
        for (int i = 0; i < kEdgesPerTarget; ++i) edges.push_back({0, t, rng.uniform(-30, 30)});
    }
    ContractionDsu dsu(n);
    ActiveForest forest(n, edges, dsu);
    std::vector<std::int64_t> position(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) position[v] = v;
    std::int64_t clock = n;
    auto closeness = [&](Vertex v) { return position[v]; };
    forest.set_closeness(closeness);

    auto reps = [&] {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n; ++v) {
            if (dsu.is_representative(v)) out.push_back(v);
        }
        std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return position[a] < position[b]; });
        return out;
    };
    auto pick = [&](const std::vector<Vertex>& from) { return from[rng.below(from.size())]; };
    // As in the solver, an edge is held by at most one node at a time.
    std::vector<Vertex> holder(edges.size(), kNoVertex);
    auto take = [&](Vertex x, EdgeId e) {
        if (forest.has_active(x)) holder[forest.active_edge(x)] = kNoVertex;
        holder[e] = x;
    };
    auto edges_into = [&](Vertex rep) {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
            if (holder[e] == kNoVertex && dsu.find(edges[e].target) == rep) out.push_back(e);
        }
        return out;
    };

    try {
        for (int step = 0; step < ops; ++step) {
            const std::vector<Vertex> order = reps();
            std::vector<Vertex> active;
            std::vector<Vertex> idle;
            for (Vertex x = 0; x < n; ++x) (forest.has_active(x) ? active : idle).push_back(x);

            switch (rng.below(6)) {
                case 0:
                case 1: {
                    if (idle.empty()) break;
                    const auto candidates = edges_into(pick(order));
                    if (candidates.empty()) break;
                    const Vertex x = pick(idle);
                    const EdgeId e = pick(candidates);
                    take(x, e);
                    forest.insert(x, e);
                    break;
                }
                case 2: {
                    if (active.empty()) break;
                    const Vertex x = pick(active);
                    const Vertex home = forest.home(x);
                    std::vector<EdgeId> allowed;
                    const Weight current = dsu.current_cost(edges[forest.active_edge(x)]);
                    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
                        if (holder[e] != kNoVertex) continue;
                        const Vertex t = dsu.find(edges[e].target);
                        if (position[t] > position[home] || (t == home && entry_less(dsu.current_cost(edges[e]), e, current, forest.active_edge(x))))
                            allowed.push_back(e);
                    }
                    if (allowed.empty()) break;
                    const EdgeId e = pick(allowed);
                    take(x, e);
                    forest.replace(x, e);
                    break;
                }
                case 3: {
                    if (active.empty()) break;
                    const Vertex x = pick(active);
                    holder[forest.active_edge(x)] = kNoVertex;
                    forest.remove(x);
                    break;
                }
                case 4: {
                    if (order.size() < 2) break;
                    const auto k = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(std::min<std::size_t>(4, order.size()))));
                    const Weight delta = rng.uniform(-10, 10);
                    std::vector<Vertex> suffix(order.end() - static_cast<std::ptrdiff_t>(k), order.end());
                    for (const Vertex v : suffix) dsu.add_offset(v, delta);
                    Vertex rep = suffix.front();
                    for (std::size_t i = 1; i < suffix.size(); ++i) {
                        const Vertex joined = dsu.join(rep, suffix[i]);
                        forest.merge_front(rep, suffix[i]);
                        rep = joined;
                    }
                    position[rep] = ++clock;
                    break;
                }
                default: {
                    const Vertex head = order.back();
                    const auto got = forest.query_min(head);
                    std::optional<ActiveEdge> want;
                    for (const ActiveEdge& a : forest.live_edges()) {
                        if (dsu.find(edges[a.edge].target) != head) continue;
                        if (!want || entry_less(a.cost, a.edge, want->cost, want->edge)) want = a;
                    }
                    if (stats) ++stats->queries;
                    if (got.has_value() != want.has_value())
                        return "step " + std::to_string(step) + ": query_min presence differs from the scan";
                    if (got && (got->edge != want->edge || got->cost != want->cost || got->origin != want->origin))
                        return "step " + std::to_string(step) + ": query_min differs from the scan";
                    // After consolidation the root ranks of the head are distinct.
                    std::vector<std::int32_t> ranks;
                    for (const Vertex r : forest.root_list(head)) ranks.push_back(forest.rank(r));
                    std::sort(ranks.begin(), ranks.end());
                    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
                        return "step " + std::to_string(step) + ": equal root ranks after consolidation";
                    break;
                }
            }
            forest.verify(closeness);
            if (stats) ++stats->checks;
        }
    } catch (const std::logic_error& e) {
        return e.what();
    }
    return {};
}

}  // namespace dmst::testing
