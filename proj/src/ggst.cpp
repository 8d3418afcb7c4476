#include "dmst/ggst.hpp"

#include <stdexcept>
#include <string>

#include "dmst/queues.hpp"

namespace dmst {

GgstSolver::GgstSolver(const Graph& graph, SolveOptions options)
    : graph_(graph),
      options_(options),
      budget_(options.deadline),
      dsu_(graph.n),
      forest_(graph.n, graph.edges, dsu_),
      in_begin_(static_cast<std::size_t>(graph.n) + 1, 0),
      exit_(static_cast<std::size_t>(graph.n)),
      passive_(static_cast<std::size_t>(graph.n)),
      state_(static_cast<std::size_t>(graph.n), State::Fresh),
      position_(static_cast<std::size_t>(graph.n), 0),
      in_pick_(static_cast<std::size_t>(graph.n), -1) {
    graph.validate();
    auto keep = [&](const Edge& e) { return e.origin != e.target && e.target != graph.root; };
    for (const Edge& e : graph.edges) {
        if (keep(e)) ++in_begin_[e.target + 1];
    }
    for (Vertex v = 0; v < graph.n; ++v) in_begin_[v + 1] += in_begin_[v];
    in_edges_.resize(static_cast<std::size_t>(in_begin_[graph.n]));
    std::vector<EdgeId> fill(in_begin_.begin(), in_begin_.end() - 1);
    for (EdgeId id = 0; id < graph.m(); ++id) {
        const Edge& e = graph.edges[id];
        if (keep(e)) in_edges_[fill[e.target]++] = id;
        budget_.tick();
    }
    if (graph.n > 0) state_[graph.root] = State::Done;
    if (options_.check_invariants) forest_.set_closeness([this](Vertex v) { return position_[v]; });
}

void GgstSolver::run() {
    const auto& edges = graph_.edges;
    Vertex next_start = 0;
    while (true) {
        while (next_start < graph_.n && state_[next_start] != State::Fresh) ++next_start;
        if (next_start == graph_.n) break;
        ++result_.stats.paths;
        extend(next_start);

        while (!path_.empty()) {
            budget_.tick();
            const Vertex head = path_.back();
            const auto best = forest_.query_min(head);
            if (!best) throw InfeasibleError();

            in_pick_[head] = static_cast<std::int32_t>(result_.picked.size());
            result_.picked.push_back(best->edge);
            result_.forest_parent.push_back(SolveResult::kNoParent);
            pick_cost_.push_back(best->cost);
            result_.total_weight += best->cost;

            const Vertex u = dsu_.find(edges[best->edge].origin);
            if (options_.check_invariants && u == head) throw std::logic_error("ggst: picked a self-loop");
            switch (state_[u]) {
                case State::Done: finish_path(); break;
                case State::Fresh: extend(u); break;
                case State::OnPath: contract(u); break;
            }
            if (options_.check_invariants) check_state();
        }
    }

    const auto& c = forest_.counters();
    result_.stats.af_inserts = c.inserts;
    result_.stats.af_replaces = c.replaces;
    result_.stats.af_deletes = c.removes;
    result_.stats.af_merges = c.merges;
    result_.stats.af_queries = c.queries;
}

void GgstSolver::extend(Vertex u) {
    state_[u] = State::OnPath;
    position_[u] = ++clock_;
    path_.push_back(u);

    for (EdgeId i = in_begin_[u]; i < in_begin_[u + 1]; ++i) {
        const EdgeId e = in_edges_[i];
        const Vertex x = dsu_.find(graph_.edges[e].origin);
        auto& list = exit_[x];
        if (!list.empty() && target_rep(list.back()) == u) {
            // Parallel edge into u: keep only the cheaper one.
            const EdgeId front = list.back();
            if (entry_less(cost(e), e, cost(front), front)) {
                list.back() = e;
                forest_.replace(x, e);
                ++result_.stats.exit_list_inserts;
                ++result_.stats.exit_list_deletes;
            }
            continue;
        }
        ++result_.stats.exit_list_inserts;
        if (list.empty()) {
            list.push_back(e);
            forest_.insert(x, e);
            continue;
        }
        const EdgeId demoted = list.back();
        const Vertex t = target_rep(demoted);
        if (state_[t] == State::OnPath) passive_[t].push_back(demoted);
        list.push_back(e);
        forest_.replace(x, e);
    }
}

void GgstSolver::contract(Vertex origin) {
    cycle_.clear();
    while (true) {
        const Vertex v = path_.back();
        path_.pop_back();
        cycle_.push_back(v);
        if (v == origin) break;
    }

    // Reduce incoming costs; every cycle edge now costs zero.
    for (const Vertex v : cycle_) dsu_.add_offset(v, -pick_cost_[in_pick_[v]]);

    // Outgoing edges of the cycle are self-loops or point down the path.
    for (const Vertex v : cycle_) {
        result_.stats.exit_list_deletes += exit_[v].size();
        std::vector<EdgeId>().swap(exit_[v]);
        if (forest_.has_active(v)) forest_.remove(v);
    }

    Vertex rep = cycle_.front();
    for (std::size_t i = 1; i < cycle_.size(); ++i) {
        const Vertex v = cycle_[i];
        const Vertex joined = dsu_.join(rep, v);
        forest_.merge_front(rep, v);
        rep = joined;
    }

    // Each passive edge into the cycle means its origin has at least two
    // edges into it, all at the front of its exit list.
    for (const Vertex v : cycle_) {
        for (const EdgeId e : passive_[v]) {
            const Vertex x = dsu_.find(graph_.edges[e].origin);
            if (x == rep) {
                ++result_.stats.stale_passive_entries;
                continue;
            }
            auto& list = exit_[x];
            if (options_.check_invariants &&
                (list.size() < 2 || target_rep(list.back()) != rep || target_rep(list[list.size() - 2]) != rep))
                throw std::logic_error("ggst: exit list of " + std::to_string(x) + " lacks two edges into the cycle");
            const EdgeId front = list.back();
            const EdgeId second = list[list.size() - 2];
            list.pop_back();
            if (entry_less(cost(second), second, cost(front), front)) {
                forest_.replace(x, second);
            } else {
                list.back() = front;
            }
            ++result_.stats.exit_list_deletes;
        }
        std::vector<EdgeId>().swap(passive_[v]);
    }

    state_[rep] = State::OnPath;
    position_[rep] = ++clock_;
    path_.push_back(rep);

    // The new head picks next; that pick replaces one edge of this cycle.
    const auto next_pick = static_cast<std::int32_t>(result_.picked.size());
    for (const Vertex v : cycle_) result_.forest_parent[in_pick_[v]] = next_pick;
    ++result_.stats.contractions;
    result_.stats.contracted_cycle_length += cycle_.size();
}

void GgstSolver::finish_path() {
    for (const Vertex v : path_) {
        state_[v] = State::Done;
        std::vector<EdgeId>().swap(passive_[v]);
    }
    path_.clear();
}

void GgstSolver::check_state() {
    forest_.verify([this](Vertex v) { return position_[v]; });
    for (Vertex x = 0; x < graph_.n; ++x) {
        const auto& list = exit_[x];
        if (list.empty()) {
            if (forest_.has_active(x)) throw std::logic_error("ggst: active edge without exit list");
            continue;
        }
        if (!dsu_.is_representative(x)) throw std::logic_error("ggst: exit list of a contracted vertex");
        if (forest_.active_edge(x) != list.back()) throw std::logic_error("ggst: exit list front is not the active edge");
        for (std::size_t i = 1; i < list.size(); ++i) {
            // Strictly increasing positions towards the front also rules out
            // two edges into the same super-vertex.
            if (position_[target_rep(list[i - 1])] >= position_[target_rep(list[i])])
                throw std::logic_error("ggst: exit list of " + std::to_string(x) + " is not ordered by path position");
        }
    }
}

SolveResult ggst_solve(const Graph& graph, const SolveOptions& options) {
    GgstSolver solver(graph, options);
    solver.run();
    return solver.result();
}

}  // namespace dmst
