#include "dmst/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmst {

namespace {

// Every vertex reaches the root by following chosen parents.
bool reaches_root(const Graph& graph, const std::vector<Vertex>& parent, std::vector<char>& state) {
    std::fill(state.begin(), state.end(), 0);  // 0 unknown, 1 on current walk, 2 reaches root
    state[graph.root] = 2;
    for (Vertex v = 0; v < graph.n; ++v) {
        Vertex x = v;
        while (state[x] == 0) {
            state[x] = 1;
            x = parent[x];
        }
        if (state[x] == 1) return false;
        for (Vertex y = v; state[y] == 1; y = parent[y]) state[y] = 2;
    }
    return true;
}

}  // namespace

std::optional<OracleResult> brute_force(const Graph& graph) {
    if (graph.n > kBruteForceMaxVertices) throw std::invalid_argument("brute_force: too many vertices");
    graph.validate();

    std::vector<std::vector<EdgeId>> candidates(static_cast<std::size_t>(graph.n));
    for (EdgeId id = 0; id < graph.m(); ++id) {
        const Edge& e = graph.edges[id];
        if (e.origin != e.target && e.target != graph.root) candidates[e.target].push_back(id);
    }
    std::vector<Vertex> free_vertices;
    for (Vertex v = 0; v < graph.n; ++v) {
        if (v == graph.root) continue;
        if (candidates[v].empty()) return std::nullopt;
        free_vertices.push_back(v);
    }

    std::vector<std::size_t> choice(free_vertices.size(), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(graph.n), kNoVertex);
    std::vector<char> state(static_cast<std::size_t>(graph.n));
    std::optional<OracleResult> best;
    while (true) {
        Weight weight = 0;
        for (std::size_t i = 0; i < free_vertices.size(); ++i) {
            const Edge& e = graph.edges[candidates[free_vertices[i]][choice[i]]];
            parent[free_vertices[i]] = e.origin;
            weight += e.weight;
        }
        if ((!best || weight < best->weight) && reaches_root(graph, parent, state)) {
            best = OracleResult{weight, {}};
            for (std::size_t i = 0; i < free_vertices.size(); ++i) best->edges.push_back(candidates[free_vertices[i]][choice[i]]);
        }

        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == candidates[free_vertices[i]].size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    if (best) std::sort(best->edges.begin(), best->edges.end());
    return best;
}

std::optional<Weight> naive_edmonds(const Graph& graph) {
    graph.validate();
    struct Arc {
        Vertex from;
        Vertex to;
        Weight weight;
    };
    std::vector<Arc> arcs;
    for (const Edge& e : graph.edges) {
        if (e.origin != e.target) arcs.push_back({e.origin, e.target, e.weight});
    }

    Vertex n = graph.n;
    Vertex root = graph.root;
    Weight total = 0;
    while (true) {
        std::vector<Weight> in_cost(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> pred(static_cast<std::size_t>(n), kNoVertex);
        for (const Arc& a : arcs) {
            if (a.to == root) continue;
            if (pred[a.to] == kNoVertex || a.weight < in_cost[a.to]) {
                in_cost[a.to] = a.weight;
                pred[a.to] = a.from;
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            if (v != root && pred[v] == kNoVertex) return std::nullopt;
        }

        // Label the cycles of the chosen edges.
        std::vector<Vertex> cycle_id(static_cast<std::size_t>(n), kNoVertex);
        std::vector<Vertex> walk(static_cast<std::size_t>(n), kNoVertex);
        Vertex cycles = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (v == root) continue;
            total += in_cost[v];
            Vertex x = v;
            while (x != root && walk[x] != v && cycle_id[x] == kNoVertex) {
                walk[x] = v;
                x = pred[x];
            }
            if (x != root && cycle_id[x] == kNoVertex) {
                for (Vertex y = pred[x]; y != x; y = pred[y]) cycle_id[y] = cycles;
                cycle_id[x] = cycles++;
            }
        }
        if (cycles == 0) return total;

        // Rebuild: every cycle becomes one vertex, the rest stay singletons,
        // and an edge into v is reduced by the cost chosen for v.
        Vertex next_id = cycles;
        for (Vertex v = 0; v < n; ++v) {
            if (cycle_id[v] == kNoVertex) cycle_id[v] = next_id++;
        }
        std::vector<Arc> rebuilt;
        for (const Arc& a : arcs) {
            const Vertex from = cycle_id[a.from];
            const Vertex to = cycle_id[a.to];
            if (from == to || a.to == root) continue;
            rebuilt.push_back({from, to, a.weight - in_cost[a.to]});
        }
        arcs = std::move(rebuilt);
        root = cycle_id[root];
        n = next_id;
    }
}

}  // namespace dmst
