#include "dmst/active_forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dmst/queues.hpp"

namespace dmst {

namespace {

[[noreturn]] void violation(const std::string& what) { throw std::logic_error("active forest: " + what); }

}  // namespace

ActiveForest::ActiveForest(Vertex n, std::span<const Edge> edges, ContractionDsu& dsu)
    : n_(n),
      edges_(edges),
      dsu_(dsu),
      next_(2 * static_cast<std::size_t>(n)),
      prev_(2 * static_cast<std::size_t>(n)),
      edge_(static_cast<std::size_t>(n), kNoEdge),
      parent_(static_cast<std::size_t>(n), kNil),
      child_(static_cast<std::size_t>(n), kNil),
      rank_(static_cast<std::size_t>(n), 0),
      in_use_(static_cast<std::size_t>(n), 0),
      key_(static_cast<std::size_t>(n), 0) {
    std::iota(next_.begin(), next_.end(), 0);
    std::iota(prev_.begin(), prev_.end(), 0);
}

void ActiveForest::unlink(std::int32_t x) {
    next_[prev_[x]] = next_[x];
    prev_[next_[x]] = prev_[x];
    next_[x] = prev_[x] = x;
}

void ActiveForest::append_root(Vertex h, std::int32_t x) {
    const std::int32_t s = sentinel(h);
    const std::int32_t last = prev_[s];
    next_[last] = x;
    prev_[x] = last;
    next_[x] = s;
    prev_[s] = x;
}

void ActiveForest::detach(Vertex x) {
    const std::int32_t p = parent_[x];
    if (p != kNil) {
        if (next_[x] == x) {
            child_[p] = kNil;
        } else {
            if (child_[p] == x) child_[p] = next_[x];
            unlink(x);
        }
        --rank_[p];
        parent_[x] = kNil;
    } else {
        unlink(x);
    }
}

void ActiveForest::link(Vertex child, Vertex parent) {
    parent_[child] = parent;
    const std::int32_t first = child_[parent];
    if (first == kNil) {
        child_[parent] = child;
        next_[child] = prev_[child] = child;
    } else {
        const std::int32_t after = next_[first];
        next_[first] = child;
        prev_[child] = first;
        next_[child] = after;
        prev_[after] = child;
    }
    ++rank_[parent];
}

void ActiveForest::insert(Vertex origin, EdgeId edge) {
    if (in_use_[origin]) violation("insert: origin " + std::to_string(origin) + " already has an active edge");
    ++counters_.inserts;
    in_use_[origin] = 1;
    edge_[origin] = edge;
    parent_[origin] = kNil;
    child_[origin] = kNil;
    rank_[origin] = 0;
    append_root(home(origin), origin);
}

void ActiveForest::replace(Vertex origin, EdgeId edge) {
    if (!in_use_[origin]) violation("replace: origin " + std::to_string(origin) + " has no active edge");
    ++counters_.replaces;
    if (closeness_) {
        const Vertex old_home = home(origin);
        const Vertex new_home = dsu_.find(edges_[edge].target);
        const bool closer = closeness_(new_home) > closeness_(old_home);
        const bool cheaper =
            new_home == old_home && entry_less(dsu_.current_cost(edges_[edge]), edge, cost(origin), edge_[origin]);
        if (!closer && !cheaper) violation("replace: new edge is neither closer to the head nor cheaper");
    }
    detach(origin);
    edge_[origin] = edge;
    append_root(home(origin), origin);
}

void ActiveForest::remove(Vertex origin) {
    if (!in_use_[origin]) violation("remove: origin " + std::to_string(origin) + " has no active edge");
    ++counters_.removes;
    detach(origin);

    scratch_.clear();
    if (const std::int32_t first = child_[origin]; first != kNil) {
        std::int32_t c = first;
        do {
            scratch_.push_back(c);
            c = next_[c];
        } while (c != first);
    }
    for (const std::int32_t c : scratch_) {
        parent_[c] = kNil;
        next_[c] = prev_[c] = c;
        append_root(home(c), c);
    }
    child_[origin] = kNil;
    rank_[origin] = 0;
    in_use_[origin] = 0;
    edge_[origin] = kNoEdge;
}

void ActiveForest::merge_front(Vertex first, Vertex second) {
    const Vertex survivor = dsu_.find(first);
    if (first == second || dsu_.find(second) != survivor) violation("merge_front: vertices were not joined");
    ++counters_.merges;
    const Vertex absorbed = survivor == first ? second : first;

    const std::int32_t from = sentinel(absorbed);
    if (next_[from] == from) return;
    const std::int32_t head = next_[from];
    const std::int32_t tail = prev_[from];
    next_[from] = prev_[from] = from;

    const std::int32_t into = sentinel(survivor);
    const std::int32_t last = prev_[into];
    next_[last] = head;
    prev_[head] = last;
    next_[tail] = into;
    prev_[into] = tail;
}

std::optional<ActiveEdge> ActiveForest::query_min(Vertex head) {
    ++counters_.queries;
    const std::int32_t s = sentinel(head);
    scratch_.clear();
    for (std::int32_t x = next_[s]; x != s; x = next_[x]) scratch_.push_back(x);
    next_[s] = prev_[s] = s;

    std::int32_t max_rank = -1;
    for (std::int32_t x : scratch_) {
        next_[x] = prev_[x] = x;
        const Vertex h = home(x);
        if (h != head) {
            append_root(h, x);
            continue;
        }
        key_[x] = cost(x);
        while (true) {
            const std::int32_t r = rank_[x];
            if (static_cast<std::size_t>(r) >= rank_table_.size()) rank_table_.resize(static_cast<std::size_t>(r) + 1, kNil);
            const std::int32_t other = rank_table_[r];
            if (other == kNil) {
                rank_table_[r] = x;
                max_rank = std::max(max_rank, r);
                break;
            }
            rank_table_[r] = kNil;
            std::int32_t winner = x;
            std::int32_t loser = other;
            if (entry_less(key_[other], edge_[other], key_[x], edge_[x])) std::swap(winner, loser);
            link(loser, winner);
            x = winner;
        }
    }

    std::int32_t best = kNil;
    for (std::int32_t r = 0; r <= max_rank; ++r) {
        const std::int32_t x = rank_table_[r];
        if (x == kNil) continue;
        rank_table_[r] = kNil;
        append_root(head, x);
        if (best == kNil || entry_less(key_[x], edge_[x], key_[best], edge_[best])) best = x;
    }
    if (best == kNil) return std::nullopt;
    return ActiveEdge{best, edge_[best], key_[best]};
}

std::vector<Vertex> ActiveForest::root_list(Vertex h) const {
    std::vector<Vertex> out;
    const std::int32_t s = sentinel(h);
    for (std::int32_t x = next_[s]; x != s; x = next_[x]) out.push_back(x);
    return out;
}

std::vector<ActiveEdge> ActiveForest::live_edges() {
    std::vector<ActiveEdge> out;
    for (Vertex x = 0; x < n_; ++x) {
        if (in_use_[x]) out.push_back({x, edge_[x], cost(x)});
    }
    return out;
}

void ActiveForest::verify(const std::function<std::int64_t(Vertex)>& closeness) {
    std::int64_t reached = 0;
    std::vector<std::int32_t> stack;
    for (Vertex h = 0; h < n_; ++h) {
        const std::int32_t s = sentinel(h);
        if (next_[s] != s && !dsu_.is_representative(h)) violation("heap of non-representative " + std::to_string(h) + " is not empty");
        for (std::int32_t root = next_[s]; root != s; root = next_[root]) {
            if (prev_[next_[root]] != root) violation("broken root list of heap " + std::to_string(h));
            if (!in_use_[root]) violation("dead node in root list");
            if (parent_[root] != kNil) violation("root with parent");
            if (home(root) != h) violation("invariant 1: root " + std::to_string(root) + " outside its home heap");

            stack.assign(1, root);
            while (!stack.empty()) {
                const std::int32_t u = stack.back();
                stack.pop_back();
                ++reached;
                const Vertex home_u = home(u);
                std::int32_t children = 0;
                if (const std::int32_t first = child_[u]; first != kNil) {
                    std::int32_t c = first;
                    do {
                        ++children;
                        if (parent_[c] != u || !in_use_[c]) violation("broken child list");
                        const Vertex home_c = home(c);
                        if (closeness(home_u) < closeness(home_c))
                            violation("invariant 2: parent " + std::to_string(u) + " is farther from the head than child " + std::to_string(c));
                        if (home_u == h && home_c == h && cost(u) > cost(c))
                            violation("invariant 3: heap order broken between " + std::to_string(u) + " and " + std::to_string(c));
                        stack.push_back(c);
                        c = next_[c];
                    } while (c != first);
                }
                if (children != rank_[u]) violation("rank of " + std::to_string(u) + " differs from its child count");
            }
        }
    }
    const auto live = std::count(in_use_.begin(), in_use_.end(), char{1});
    if (reached != live) violation("unreachable live nodes");
}

}  // namespace dmst
