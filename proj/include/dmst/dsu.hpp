#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmst/graph.hpp"

namespace dmst {

/// Union-by-size disjoint set forest with full path compression.
class PlainDsu {
public:
    explicit PlainDsu(Vertex n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }

    Vertex find(Vertex v) {
        Vertex r = v;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[v] != r) v = std::exchange(parent_[v], r);
        return r;
    }

    /// Unites the sets of a and b and returns the new representative. On equal
    /// sizes the representative of a survives.
    Vertex join(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    bool same(Vertex a, Vertex b) { return find(a) == find(b); }
    Vertex set_size(Vertex v) { return size_[find(v)]; }
    [[nodiscard]] Vertex size() const { return static_cast<Vertex>(parent_.size()); }

private:
    std::vector<Vertex> parent_;
    std::vector<Vertex> size_;
};

/// Disjoint set forest tracking contractions. Every node stores an additive
/// offset relative to its parent; the offset of a vertex is the sum along its
/// path to the representative (inclusive), so an edge into v currently costs
/// weight + offset(v). Compression folds the skipped offsets into the node.
class ContractionDsu {
public:
    explicit ContractionDsu(Vertex n)
        : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), offset_(static_cast<std::size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }

    Vertex find(Vertex v) {
        Vertex r = v;
        while (parent_[r] != r) {
            r = parent_[r];
            ++path_visits_;
        }
        if (r == v || parent_[v] == r) return r;

        path_.clear();
        for (Vertex x = v; parent_[x] != r; x = parent_[x]) path_.push_back(x);
        Weight acc = offset_[parent_[path_.back()]];
        for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
            acc += offset_[*it];
            offset_[*it] = acc;
            parent_[*it] = r;
        }
        return r;
    }

    bool is_representative(Vertex v) const { return parent_[v] == v; }

    /// Unites the sets of a and b (union by size, ties keep a's representative)
    /// without changing any current cost.
    Vertex join(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        offset_[b] -= offset_[a];
        return a;
    }

    /// Shifts the current cost of every edge into rep's set by delta.
    void add_offset(Vertex rep, Weight delta) {
        if (!is_representative(rep)) throw std::logic_error("add_offset: vertex is not a representative");
        offset_[rep] += delta;
    }

    Weight offset(Vertex v) {
        const Vertex r = find(v);
        return r == v ? offset_[r] : offset_[v] + offset_[r];
    }

    Weight current_cost(const Edge& e) { return e.weight + offset(e.target); }

    Vertex set_size(Vertex v) { return size_[find(v)]; }
    [[nodiscard]] Vertex size() const { return static_cast<Vertex>(parent_.size()); }

    /// Parent hops taken by find so far.
    [[nodiscard]] std::uint64_t path_visits() const { return path_visits_; }

private:
    std::vector<Vertex> parent_;
    std::vector<Vertex> size_;
    std::vector<Weight> offset_;
    std::vector<Vertex> path_;
    std::uint64_t path_visits_ = 0;
};

}  // namespace dmst
