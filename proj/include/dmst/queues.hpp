#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dmst/graph.hpp"

namespace dmst {

struct QueueEntry {
    EdgeId edge = kNoEdge;
    Weight cost = 0;

    friend bool operator==(const QueueEntry&, const QueueEntry&) = default;
};

/// Ordering shared by all strategies: cheaper first, smaller edge id on ties.
inline bool entry_less(Weight cost_a, EdgeId edge_a, Weight cost_b, EdgeId edge_b) {
    return cost_a < cost_b || (cost_a == cost_b && edge_a < edge_b);
}

/// A family of incoming-edge queues, one per slot (super-vertex). Every
/// strategy is built from the slot count and the edge array of the graph and
/// supports insert, extract_min, add_constant and merge. After merge(into,
/// from) the union lives in `into` and `from` is empty.
template <class Q>
concept EdgeQueueSet = std::constructible_from<Q, Vertex, std::span<const Edge>> &&
    requires(Q q, const Q cq, Vertex slot, EdgeId edge, Weight cost) {
        q.insert(slot, edge, cost);
        { q.extract_min(slot) } -> std::same_as<std::optional<QueueEntry>>;
        q.add_constant(slot, cost);
        q.merge(slot, slot);
        { cq.size(slot) } -> std::convertible_to<std::size_t>;
        { cq.empty(slot) } -> std::convertible_to<bool>;
    };

enum class QueueStrategy { Matrix, LazyHeap, SmallerIntoLarger };

std::string_view to_string(QueueStrategy strategy);

/// Dense rows indexed by origin vertex, allocated on first use. A row keeps
/// at most one edge per origin (the cheaper one) and a row-wide offset, so
/// add_constant is O(1) and extract_min/merge are O(n).
class MatrixQueueSet {
public:
    static constexpr Vertex kMaxVertices = 1 << 14;

    MatrixQueueSet(Vertex slots, std::span<const Edge> edges);

    void insert(Vertex slot, EdgeId edge, Weight cost);
    std::optional<QueueEntry> extract_min(Vertex slot);
    void add_constant(Vertex slot, Weight delta);
    void merge(Vertex into, Vertex from);
    [[nodiscard]] std::size_t size(Vertex slot) const { return rows_[slot].count; }
    [[nodiscard]] bool empty(Vertex slot) const { return rows_[slot].count == 0; }

private:
    struct Row {
        std::vector<Weight> key;
        std::vector<EdgeId> edge;
        Weight offset = 0;
        std::size_t count = 0;
    };

    Row& row(Vertex slot);
    void put(Row& row, EdgeId edge, Weight key);

    std::span<const Edge> edges_;
    Vertex width_;
    std::vector<Row> rows_;
};

/// Skew heaps over a node pool indexed by edge id. Each node carries a
/// pending delta for its whole subtree that is pushed to the children before
/// the node's children are inspected.
class LazyHeapQueueSet {
public:
    LazyHeapQueueSet(Vertex slots, std::span<const Edge> edges);

    void insert(Vertex slot, EdgeId edge, Weight cost);
    std::optional<QueueEntry> extract_min(Vertex slot);
    void add_constant(Vertex slot, Weight delta);
    void merge(Vertex into, Vertex from);
    [[nodiscard]] std::size_t size(Vertex slot) const { return size_[slot]; }
    [[nodiscard]] bool empty(Vertex slot) const { return root_[slot] == kNoEdge; }

private:
    struct Node {
        Weight key = 0;
        Weight delta = 0;
        EdgeId left = kNoEdge;
        EdgeId right = kNoEdge;
    };

    void push(EdgeId x);
    bool less(EdgeId a, EdgeId b) const { return entry_less(nodes_[a].key, a, nodes_[b].key, b); }
    EdgeId meld(EdgeId a, EdgeId b);

    std::vector<Node> nodes_;
    std::vector<EdgeId> root_;
    std::vector<std::size_t> size_;
    std::vector<EdgeId> path_;
};

/// Binary heaps with a per-queue offset. Merging moves every element of the
/// smaller heap into the larger one, rebasing its key by the offset difference.
class SilQueueSet {
public:
    SilQueueSet(Vertex slots, std::span<const Edge> edges);

    void insert(Vertex slot, EdgeId edge, Weight cost);
    std::optional<QueueEntry> extract_min(Vertex slot);
    void add_constant(Vertex slot, Weight delta) { queues_[slot].offset += delta; }
    void merge(Vertex into, Vertex from);
    [[nodiscard]] std::size_t size(Vertex slot) const { return queues_[slot].heap.size(); }
    [[nodiscard]] bool empty(Vertex slot) const { return queues_[slot].heap.empty(); }

    /// Elements moved between heaps by merge so far.
    [[nodiscard]] std::uint64_t moves() const { return moves_; }

private:
    struct Queue {
        std::vector<std::pair<Weight, EdgeId>> heap;
        Weight offset = 0;
    };

    std::vector<Queue> queues_;
    std::uint64_t moves_ = 0;
};

static_assert(EdgeQueueSet<MatrixQueueSet>);
static_assert(EdgeQueueSet<LazyHeapQueueSet>);
static_assert(EdgeQueueSet<SilQueueSet>);

}  // namespace dmst
