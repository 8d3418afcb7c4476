#include "dmst/recon.hpp"

#include <string>

namespace dmst {

std::vector<std::int32_t> build_leaf_map(const SolveResult& result, const Graph& graph) {
    std::vector<std::int32_t> leaf_of(static_cast<std::size_t>(graph.n), -1);
    for (std::size_t i = 0; i < result.picked.size(); ++i) {
        const Vertex v = graph.edges[result.picked[i]].target;
        if (leaf_of[v] == -1) leaf_of[v] = static_cast<std::int32_t>(i);
    }
    for (Vertex v = 0; v < graph.n; ++v) {
        if (v != graph.root && leaf_of[v] == -1)
            throw ReconstructionError("vertex " + std::to_string(v) + " has no picked incoming edge");
    }
    return leaf_of;
}

std::vector<EdgeId> reconstruct(const SolveResult& result, std::span<const std::int32_t> leaf_of, const Graph& graph,
                                bool verify, ReconstructStats* stats) {
    const auto picks = static_cast<std::int32_t>(result.picked.size());
    std::vector<char> deleted(static_cast<std::size_t>(picks), 0);
    std::vector<EdgeId> out;
    out.reserve(graph.n > 0 ? static_cast<std::size_t>(graph.n) - 1 : 0);
    std::uint64_t visits = 0;

    for (std::int32_t i = picks - 1; i >= 0; --i) {
        if (deleted[i]) continue;
        const EdgeId e = result.picked[i];
        out.push_back(e);
        for (std::int32_t j = leaf_of[graph.edges[e].target]; j != SolveResult::kNoParent && !deleted[j];
             j = result.forest_parent[j]) {
            deleted[j] = 1;
            ++visits;
        }
    }
    if (stats) stats->node_visits = visits;

    if (verify) {
        if (!is_arborescence(graph, out)) throw ReconstructionError("reconstructed edges are not an arborescence");
        if (total_weight(graph, out) != result.total_weight)
            throw ReconstructionError("reconstructed weight differs from the solver's total");
    }
    return out;
}

std::vector<EdgeId> reconstruct(const SolveResult& result, const Graph& graph, bool verify) {
    const auto leaf_of = build_leaf_map(result, graph);
    return reconstruct(result, leaf_of, graph, verify);
}

bool is_arborescence(const Graph& graph, std::span<const EdgeId> edge_ids) {
    if (graph.n <= 0) return edge_ids.empty();
    if (static_cast<Vertex>(edge_ids.size()) != graph.n - 1) return false;
    std::vector<EdgeId> incoming(static_cast<std::size_t>(graph.n), kNoEdge);
    for (const EdgeId id : edge_ids) {
        if (id < 0 || id >= graph.m()) return false;
        const Vertex v = graph.edges[id].target;
        if (v == graph.root || incoming[v] != kNoEdge) return false;
        incoming[v] = id;
    }

    // Children lists, then a traversal from the root.
    std::vector<EdgeId> first(static_cast<std::size_t>(graph.n) + 1, 0);
    for (const EdgeId id : edge_ids) ++first[graph.edges[id].origin + 1];
    for (Vertex v = 0; v < graph.n; ++v) first[v + 1] += first[v];
    std::vector<Vertex> children(edge_ids.size());
    std::vector<EdgeId> fill(first.begin(), first.end() - 1);
    for (const EdgeId id : edge_ids) children[fill[graph.edges[id].origin]++] = graph.edges[id].target;

    std::vector<char> seen(static_cast<std::size_t>(graph.n), 0);
    std::vector<Vertex> stack{graph.root};
    seen[graph.root] = 1;
    Vertex reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId i = first[v]; i < first[v + 1]; ++i) {
            const Vertex c = children[i];
            if (seen[c]) return false;
            seen[c] = 1;
            ++reached;
            stack.push_back(c);
        }
    }
    return reached == graph.n;
}

Weight total_weight(const Graph& graph, std::span<const EdgeId> edge_ids) {
    Weight sum = 0;
    for (const EdgeId id : edge_ids) sum += graph.edges[id].weight;
    return sum;
}

}  // namespace dmst
