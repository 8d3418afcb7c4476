#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dmst/active_forest.hpp"
#include "dmst/dsu.hpp"
#include "dmst/graph.hpp"
#include "dmst/solve_result.hpp"
#include "dmst/solver.hpp"

namespace dmst {

/// Growth-path version of Edmonds' algorithm in O(n log n + m).
///
/// The head of the growth path repeatedly takes its cheapest incoming active
/// edge. A new origin extends the path; an origin already on the path closes
/// a cycle, which is contracted into a new head; an origin already connected
/// to the root finishes the path, and a new one starts at the lowest-index
/// uncovered vertex (no dummy root edges are added).
///
/// Every vertex keeps an exit list of its edges into the path, closest to the
/// head first; only the front edge is active and lives in the active forest.
/// Path, exit lists and passive lists are arrays stored back to front. Exit
/// lists of contracted vertices are cleared wholesale and the matching passive
/// entries are left in place: by the time such an entry is read it is a
/// self-loop and gets skipped. Multi-edges into a new cycle are removed by
/// dropping the dearer of the first two exit-list edges, once per passive
/// edge into the cycle.
class GgstSolver final : public Solver {
public:
    explicit GgstSolver(const Graph& graph, SolveOptions options = {});

    void run() override;
    [[nodiscard]] const SolveResult& result() const override { return result_; }

private:
    enum class State : std::uint8_t { Fresh, OnPath, Done };

    void extend(Vertex u);
    void contract(Vertex origin);
    void finish_path();
    void check_state();

    Weight cost(EdgeId e) { return dsu_.current_cost(graph_.edges[e]); }
    Vertex target_rep(EdgeId e) { return dsu_.find(graph_.edges[e].target); }

    const Graph& graph_;
    SolveOptions options_;
    Budget budget_;
    ContractionDsu dsu_;
    ActiveForest forest_;

    std::vector<EdgeId> in_begin_;  // incoming edges of v: in_edges_[in_begin_[v] .. in_begin_[v+1])
    std::vector<EdgeId> in_edges_;

    std::vector<std::vector<EdgeId>> exit_;
    std::vector<std::vector<EdgeId>> passive_;
    std::vector<Vertex> path_;  // head at the back
    std::vector<State> state_;
    std::vector<std::int64_t> position_;  // monotone stamp, larger = closer to the head
    std::int64_t clock_ = 0;

    std::vector<std::int32_t> in_pick_;
    std::vector<Weight> pick_cost_;
    std::vector<Vertex> cycle_;
    SolveResult result_;
};

SolveResult ggst_solve(const Graph& graph, const SolveOptions& options = {});

}  // namespace dmst
