#include "dmst/queues.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace dmst {

std::string_view to_string(QueueStrategy strategy) {
    switch (strategy) {
        case QueueStrategy::Matrix: return "matrix";
        case QueueStrategy::LazyHeap: return "heap";
        case QueueStrategy::SmallerIntoLarger: return "sil";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// MatrixQueueSet

MatrixQueueSet::MatrixQueueSet(Vertex slots, std::span<const Edge> edges)
    : edges_(edges), width_(slots), rows_(static_cast<std::size_t>(slots)) {
    if (slots > kMaxVertices)
        throw std::length_error("matrix strategy supports at most " + std::to_string(kMaxVertices) + " vertices");
}

MatrixQueueSet::Row& MatrixQueueSet::row(Vertex slot) {
    Row& r = rows_[slot];
    if (r.edge.empty()) {
        r.key.assign(static_cast<std::size_t>(width_), 0);
        r.edge.assign(static_cast<std::size_t>(width_), kNoEdge);
    }
    return r;
}

void MatrixQueueSet::put(Row& r, EdgeId edge, Weight key) {
    const Vertex origin = edges_[edge].origin;
    EdgeId& cell = r.edge[origin];
    if (cell == kNoEdge) {
        cell = edge;
        r.key[origin] = key;
        ++r.count;
    } else if (entry_less(key, edge, r.key[origin], cell)) {
        cell = edge;
        r.key[origin] = key;
    }
}

void MatrixQueueSet::insert(Vertex slot, EdgeId edge, Weight cost) {
    Row& r = row(slot);
    put(r, edge, cost - r.offset);
}

std::optional<QueueEntry> MatrixQueueSet::extract_min(Vertex slot) {
    Row& r = rows_[slot];
    if (r.count == 0) return std::nullopt;
    Vertex best = kNoVertex;
    for (Vertex o = 0; o < width_; ++o) {
        if (r.edge[o] == kNoEdge) continue;
        if (best == kNoVertex || entry_less(r.key[o], r.edge[o], r.key[best], r.edge[best])) best = o;
    }
    const QueueEntry out{r.edge[best], r.key[best] + r.offset};
    r.edge[best] = kNoEdge;
    --r.count;
    return out;
}

void MatrixQueueSet::add_constant(Vertex slot, Weight delta) { rows_[slot].offset += delta; }

void MatrixQueueSet::merge(Vertex into, Vertex from) {
    if (into == from) return;
    Row& src = rows_[from];
    if (src.edge.empty()) return;
    Row& dst = rows_[into];
    if (dst.edge.empty()) {
        std::swap(dst, src);
        return;
    }
    const Weight rebase = src.offset - dst.offset;
    for (Vertex o = 0; o < width_; ++o) {
        if (src.edge[o] != kNoEdge) put(dst, src.edge[o], src.key[o] + rebase);
    }
    src = Row{};
}

// ---------------------------------------------------------------------------
// LazyHeapQueueSet

LazyHeapQueueSet::LazyHeapQueueSet(Vertex slots, std::span<const Edge> edges)
    : nodes_(edges.size()), root_(static_cast<std::size_t>(slots), kNoEdge), size_(static_cast<std::size_t>(slots), 0) {}

void LazyHeapQueueSet::push(EdgeId x) {
    Node& node = nodes_[x];
    if (node.delta == 0) return;
    node.key += node.delta;
    if (node.left != kNoEdge) nodes_[node.left].delta += node.delta;
    if (node.right != kNoEdge) nodes_[node.right].delta += node.delta;
    node.delta = 0;
}

// Top-down skew heap meld: walk the right spines, then swap children of every
// node on the merge path.
EdgeId LazyHeapQueueSet::meld(EdgeId a, EdgeId b) {
    if (a == kNoEdge) return b;
    if (b == kNoEdge) return a;
    push(a);
    push(b);
    if (less(b, a)) std::swap(a, b);
    const EdgeId root = a;
    path_.clear();
    while (true) {
        path_.push_back(a);
        EdgeId r = nodes_[a].right;
        if (r == kNoEdge) {
            nodes_[a].right = b;
            break;
        }
        push(r);
        if (less(b, r)) std::swap(r, b);
        nodes_[a].right = r;
        a = r;
    }
    for (const EdgeId x : path_) std::swap(nodes_[x].left, nodes_[x].right);
    return root;
}

void LazyHeapQueueSet::insert(Vertex slot, EdgeId edge, Weight cost) {
    nodes_[edge] = Node{cost, 0, kNoEdge, kNoEdge};
    root_[slot] = meld(root_[slot], edge);
    ++size_[slot];
}

std::optional<QueueEntry> LazyHeapQueueSet::extract_min(Vertex slot) {
    const EdgeId top = root_[slot];
    if (top == kNoEdge) return std::nullopt;
    push(top);
    const Node& node = nodes_[top];
    root_[slot] = meld(node.left, node.right);
    --size_[slot];
    return QueueEntry{top, node.key};
}

void LazyHeapQueueSet::add_constant(Vertex slot, Weight delta) {
    if (root_[slot] != kNoEdge) nodes_[root_[slot]].delta += delta;
}

void LazyHeapQueueSet::merge(Vertex into, Vertex from) {
    if (into == from) return;
    root_[into] = meld(root_[into], root_[from]);
    root_[from] = kNoEdge;
    size_[into] += size_[from];
    size_[from] = 0;
}

// ---------------------------------------------------------------------------
// SilQueueSet

namespace {
constexpr auto kMinHeap = std::greater<std::pair<Weight, EdgeId>>{};
}

SilQueueSet::SilQueueSet(Vertex slots, std::span<const Edge> /*edges*/) : queues_(static_cast<std::size_t>(slots)) {}

void SilQueueSet::insert(Vertex slot, EdgeId edge, Weight cost) {
    Queue& q = queues_[slot];
    q.heap.emplace_back(cost - q.offset, edge);
    std::push_heap(q.heap.begin(), q.heap.end(), kMinHeap);
}

std::optional<QueueEntry> SilQueueSet::extract_min(Vertex slot) {
    Queue& q = queues_[slot];
    if (q.heap.empty()) return std::nullopt;
    std::pop_heap(q.heap.begin(), q.heap.end(), kMinHeap);
    const auto [key, edge] = q.heap.back();
    q.heap.pop_back();
    return QueueEntry{edge, key + q.offset};
}

void SilQueueSet::merge(Vertex into, Vertex from) {
    if (into == from) return;
    if (queues_[into].heap.size() < queues_[from].heap.size()) std::swap(queues_[into], queues_[from]);
    Queue& dst = queues_[into];
    Queue& src = queues_[from];
    const Weight rebase = src.offset - dst.offset;
    for (const auto& [key, edge] : src.heap) {
        dst.heap.emplace_back(key + rebase, edge);
        std::push_heap(dst.heap.begin(), dst.heap.end(), kMinHeap);
    }
    moves_ += src.heap.size();
    src = Queue{};
}

}  // namespace dmst
