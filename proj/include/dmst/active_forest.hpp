#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dmst/dsu.hpp"
#include "dmst/graph.hpp"

namespace dmst {

struct ActiveEdge {
    Vertex origin = kNoVertex;
    EdgeId edge = kNoEdge;
    Weight cost = 0;
};

/// Per-super-vertex Fibonacci-style heaps holding the active edges of the
/// growth path algorithm. Every origin owns at most one node; the node of an
/// origin can be moved to another heap in O(1) together with its subtree.
///
/// The heap a node belongs to (its home heap) is the heap of find(target) of
/// its edge. Moved subtrees may leave descendants outside their home heap;
/// such nodes are sent back to their home heap whenever they would become a
/// root. No minimum is cached and there is no decrease-key: query_min
/// consolidates the root list of the queried heap, linking equal ranks.
///
/// Current costs and home heaps are resolved through the contraction DSU the
/// forest is built on, which must outlive it.
class ActiveForest {
public:
    ActiveForest(Vertex n, std::span<const Edge> edges, ContractionDsu& dsu);

    /// Adds a root for `origin` to the home heap of `edge`.
    void insert(Vertex origin, EdgeId edge);

    /// Re-keys the node of `origin` to `edge` and splices it, with its subtree,
    /// into the root list of the new home heap. The new edge must point closer
    /// to the path head, or to the same super-vertex and be smaller in
    /// (cost, edge id) order.
    void replace(Vertex origin, EdgeId edge);

    /// Removes the node of `origin`; its children go to their own home heaps.
    void remove(Vertex origin);

    /// Concatenates the root lists of two heaps whose super-vertices have just
    /// been joined in the DSU; the result lives in the heap of the joined
    /// representative.
    void merge_front(Vertex first, Vertex second);

    /// Minimum active edge into `head`, after consolidating its root list.
    std::optional<ActiveEdge> query_min(Vertex head);

    [[nodiscard]] bool has_active(Vertex origin) const { return in_use_[origin] != 0; }
    [[nodiscard]] EdgeId active_edge(Vertex origin) const { return in_use_[origin] ? edge_[origin] : kNoEdge; }
    [[nodiscard]] std::int32_t rank(Vertex origin) const { return rank_[origin]; }
    [[nodiscard]] Vertex parent(Vertex origin) const { return parent_[origin]; }
    Vertex home(Vertex origin) { return dsu_.find(edges_[edge_[origin]].target); }

    /// Origins whose node sits in the root list of heap `h`, in list order.
    [[nodiscard]] std::vector<Vertex> root_list(Vertex h) const;

    /// Every live node with its current cost.
    std::vector<ActiveEdge> live_edges();

    /// Closeness of a super-vertex to the path head (larger is closer). When
    /// set, replace() validates its precondition.
    void set_closeness(std::function<std::int64_t(Vertex)> closeness) { closeness_ = std::move(closeness); }

    /// Walks the whole forest and throws std::logic_error unless
    ///   (1) every tree root sits in the root list of its home heap,
    ///   (2) a parent's home heap is at least as close to the head as its child's,
    ///   (3) heap order holds between parent and child when both are at home,
    /// and ranks, parent links and heap ownership are consistent.
    void verify(const std::function<std::int64_t(Vertex)>& closeness);

    struct Counters {
        std::uint64_t inserts = 0;
        std::uint64_t replaces = 0;
        std::uint64_t removes = 0;
        std::uint64_t merges = 0;
        std::uint64_t queries = 0;
    };
    [[nodiscard]] const Counters& counters() const { return counters_; }

private:
    static constexpr std::int32_t kNil = -1;

    [[nodiscard]] std::int32_t sentinel(Vertex h) const { return n_ + h; }
    Weight cost(Vertex x) { return dsu_.current_cost(edges_[edge_[x]]); }

    void unlink(std::int32_t x);
    void append_root(Vertex h, std::int32_t x);
    void detach(Vertex x);
    void link(Vertex child, Vertex parent);

    Vertex n_;
    std::span<const Edge> edges_;
    ContractionDsu& dsu_;

    // Circular doubly linked lists. Indices [0, n) are nodes (one per origin),
    // [n, 2n) are the root-list sentinels of the heaps.
    std::vector<std::int32_t> next_;
    std::vector<std::int32_t> prev_;

    std::vector<EdgeId> edge_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> child_;
    std::vector<std::int32_t> rank_;
    std::vector<char> in_use_;

    std::vector<Weight> key_;  // costs cached during one consolidation
    std::vector<std::int32_t> rank_table_;
    std::vector<std::int32_t> scratch_;
    std::function<std::int64_t(Vertex)> closeness_;
    Counters counters_;
};

}  // namespace dmst
