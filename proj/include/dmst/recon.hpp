#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dmst/graph.hpp"
#include "dmst/solve_result.hpp"

namespace dmst {

/// Reconstruction produced an inconsistent result (a solver bug).
class ReconstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// For every vertex, the index of the first pick whose original target is that
/// vertex; -1 for the root. Throws ReconstructionError if a non-root vertex
/// was never picked into.
std::vector<std::int32_t> build_leaf_map(const SolveResult& result, const Graph& graph);

struct ReconstructStats {
    std::uint64_t node_visits = 0;
};

/// Walks the picks in reverse. Every pick not yet deleted is a root of the
/// reconstruction forest: it joins the arborescence and the forest path from
/// the leaf of its target up to it is deleted. Returns n-1 edge ids.
/// With verify set, throws ReconstructionError unless the result is an
/// arborescence of the stated weight.
std::vector<EdgeId> reconstruct(const SolveResult& result, std::span<const std::int32_t> leaf_of, const Graph& graph,
                                bool verify = false, ReconstructStats* stats = nullptr);

/// build_leaf_map followed by reconstruct.
std::vector<EdgeId> reconstruct(const SolveResult& result, const Graph& graph, bool verify = false);

/// True iff `edge_ids` has n-1 edges, gives every non-root vertex exactly one
/// incoming edge, none to the root, and reaches all vertices from the root.
bool is_arborescence(const Graph& graph, std::span<const EdgeId> edge_ids);

Weight total_weight(const Graph& graph, std::span<const EdgeId> edge_ids);

}  // namespace dmst
