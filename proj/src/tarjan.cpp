#include "dmst/tarjan.hpp"

#include <span>
#include <stdexcept>
#include <type_traits>

namespace dmst {

template <EdgeQueueSet Queues>
TarjanSolver<Queues>::TarjanSolver(const Graph& graph, SolveOptions options)
    : graph_(graph),
      options_(options),
      budget_(options.deadline),
      weak_(graph.n),
      contracted_(graph.n),
      queues_(graph.n, std::span<const Edge>(graph.edges)),
      in_pick_(static_cast<std::size_t>(graph.n), -1) {
    graph.validate();
    for (EdgeId id = 0; id < graph.m(); ++id) {
        const Edge& e = graph.edges[id];
        if (e.origin == e.target || e.target == graph.root) continue;
        queues_.insert(e.target, id, e.weight);
        budget_.tick();
    }
    stack_.reserve(static_cast<std::size_t>(graph.n));
    for (Vertex v = graph.n - 1; v >= 0; --v) {
        if (v != graph.root) stack_.push_back(v);
    }
}

template <EdgeQueueSet Queues>
void TarjanSolver<Queues>::run() {
    const auto& edges = graph_.edges;
    auto& picked = result_.picked;
    while (!stack_.empty()) {
        budget_.tick();
        const Vertex head = stack_.back();
        stack_.pop_back();

        QueueEntry best;
        while (true) {
            const auto top = queues_.extract_min(head);
            if (!top) throw InfeasibleError();
            if (contracted_.find(edges[top->edge].origin) != head) {
                best = *top;
                break;
            }
        }
        if (options_.check_invariants && best.cost != contracted_.current_cost(edges[best.edge]))
            throw std::logic_error("tarjan: queue cost disagrees with the contraction offsets");

        in_pick_[head] = static_cast<std::int32_t>(picked.size());
        picked.push_back(best.edge);
        pick_cost_.push_back(best.cost);
        result_.forest_parent.push_back(SolveResult::kNoParent);
        result_.total_weight += best.cost;

        const Vertex origin = edges[best.edge].origin;
        if (!weak_.same(origin, head)) {
            weak_.join(origin, head);
            continue;
        }
        contract(head, origin);
    }
    if constexpr (std::is_same_v<Queues, SilQueueSet>) result_.stats.queue_moves = queues_.moves();
}

template <EdgeQueueSet Queues>
void TarjanSolver<Queues>::contract(Vertex head, Vertex origin) {
    const auto& edges = graph_.edges;
    cycle_.clear();
    cycle_.push_back(head);
    for (Vertex v = contracted_.find(origin); v != head; v = contracted_.find(edges[result_.picked[in_pick_[v]]].origin))
        cycle_.push_back(v);

    // The merged vertex is pushed on top of the stack, so the very next pick
    // is the edge entering it.
    const auto next_pick = static_cast<std::int32_t>(result_.picked.size());
    for (const Vertex v : cycle_) {
        const std::int32_t pick = in_pick_[v];
        const Weight cost = pick_cost_[pick];
        result_.stats.list_merge_scan += queues_.size(v);
        queues_.add_constant(v, -cost);
        contracted_.add_offset(v, -cost);
        if (contracted_.current_cost(edges[result_.picked[pick]]) != 0)
            throw std::logic_error("tarjan: cycle edge does not cost zero after reduction");
        result_.forest_parent[pick] = next_pick;
    }

    Vertex rep = head;
    for (std::size_t i = 1; i < cycle_.size(); ++i) {
        const Vertex v = cycle_[i];
        const Vertex joined = contracted_.join(rep, v);
        queues_.merge(joined, joined == rep ? v : rep);
        rep = joined;
    }
    ++result_.stats.contractions;
    result_.stats.contracted_cycle_length += cycle_.size();
    stack_.push_back(rep);
}

template class TarjanSolver<MatrixQueueSet>;
template class TarjanSolver<LazyHeapQueueSet>;
template class TarjanSolver<SilQueueSet>;

std::unique_ptr<Solver> make_tarjan_solver(const Graph& graph, QueueStrategy strategy, const SolveOptions& options) {
    switch (strategy) {
        case QueueStrategy::Matrix: return std::make_unique<TarjanSolver<MatrixQueueSet>>(graph, options);
        case QueueStrategy::LazyHeap: return std::make_unique<TarjanSolver<LazyHeapQueueSet>>(graph, options);
        case QueueStrategy::SmallerIntoLarger: return std::make_unique<TarjanSolver<SilQueueSet>>(graph, options);
    }
    throw std::invalid_argument("unknown queue strategy");
}

SolveResult tarjan_solve(const Graph& graph, QueueStrategy strategy, const SolveOptions& options) {
    auto solver = make_tarjan_solver(graph, strategy, options);
    solver->run();
    return solver->result();
}

}  // namespace dmst
