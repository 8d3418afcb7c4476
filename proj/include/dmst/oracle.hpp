#pragma once

#include <optional>
#include <vector>

#include "dmst/graph.hpp"

namespace dmst {

struct OracleResult {
    Weight weight = 0;
    std::vector<EdgeId> edges;  // ascending edge ids
};

inline constexpr Vertex kBruteForceMaxVertices = 12;

/// Tries every choice of one incoming edge per non-root vertex and keeps the
/// cheapest choice that is an arborescence. std::nullopt if there is none.
/// Throws std::invalid_argument for n > kBruteForceMaxVertices.
std::optional<OracleResult> brute_force(const Graph& graph);

/// Textbook Edmonds: choose the cheapest incoming edge of every vertex, stop
/// if that is acyclic, else contract all cycles into an explicitly rebuilt
/// graph with reduced costs and repeat. O(nm). std::nullopt if infeasible.
std::optional<Weight> naive_edmonds(const Graph& graph);

}  // namespace dmst
