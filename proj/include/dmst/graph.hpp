#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmst {

using Weight = std::int64_t;
using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Bound on |w| for input weights.
inline constexpr Weight kMaxAbsWeight = Weight{1} << 32;
/// Vertex count above which weights must satisfy the tighter bound below.
inline constexpr std::int64_t kMaxVerticesWideWeights = std::int64_t{1} << 20;
inline constexpr Weight kMaxAbsWeightLargeGraph = Weight{1} << 24;

struct Edge {
    Vertex origin = 0;
    Vertex target = 0;
    Weight weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable solver input. Edge ids are positions in `edges`. Self-loops and
/// parallel edges are allowed.
struct Graph {
    Vertex n = 0;
    Vertex root = 0;
    std::vector<Edge> edges;

    [[nodiscard]] EdgeId m() const { return static_cast<EdgeId>(edges.size()); }

    /// Throws std::invalid_argument if the root or an endpoint is out of range.
    void validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads "n m r" followed by m lines "u v w" (0-based vertices). Weights must
/// satisfy |w| <= kMaxAbsWeight, or kMaxAbsWeightLargeGraph when n exceeds
/// kMaxVerticesWideWeights.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list.
void write_edge_list(std::ostream& out, const Graph& graph);
std::string to_edge_list(const Graph& graph);

/// Headerless "u v" lines (extra columns ignored, '%' and '#' comments skipped).
/// Vertex count is max index + 1, all weights are 0 and root is 0; the result
/// is meant to go through sample_weights and attach_super_root.
Graph parse_konect(std::istream& in);

/// Replaces every weight by a draw from [1, max_w], edges in id order, using
/// SplitMix64 seeded with `seed` (see rng.hpp for the exact update rule).
Graph sample_weights(const Graph& graph, std::uint64_t seed, Weight max_w);

/// Result of attach_super_root: the prepared graph plus, for every vertex of
/// it except the new root, the vertex id in the input graph.
struct RootedInstance {
    Graph graph;
    std::vector<Vertex> original_vertex;
    std::vector<EdgeId> original_edge;  // per edge of graph; kNoEdge for root edges
    Weight sentinel = 0;                 // weight of the super-root edges
};

/// Keeps the largest weakly connected component (ties: the one holding the
/// smallest vertex), renumbers it densely in increasing vertex order and
/// appends a root with an edge of weight (max |w| + 1) * n' to every retained
/// vertex, n' being the retained vertex count.
RootedInstance attach_super_root(const Graph& graph);

}  // namespace dmst
