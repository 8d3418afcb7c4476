#pragma once

#include <memory>
#include <vector>

#include "dmst/dsu.hpp"
#include "dmst/graph.hpp"
#include "dmst/queues.hpp"
#include "dmst/solve_result.hpp"
#include "dmst/solver.hpp"

namespace dmst {

/// Tarjan's sequential formulation of Edmonds' algorithm. Unprocessed
/// super-vertices are kept on a stack; each one takes its cheapest
/// non-self-loop incoming edge, and an edge closing a cycle (detected on weak
/// components of the chosen edges) triggers a contraction: the cycle members'
/// queues are shifted by minus their chosen edge's cost and merged, and the
/// merged super-vertex goes back onto the stack.
template <EdgeQueueSet Queues>
class TarjanSolver final : public Solver {
public:
    explicit TarjanSolver(const Graph& graph, SolveOptions options = {});

    void run() override;
    [[nodiscard]] const SolveResult& result() const override { return result_; }

private:
    void contract(Vertex head, Vertex origin);

    const Graph& graph_;
    SolveOptions options_;
    Budget budget_;
    PlainDsu weak_;
    ContractionDsu contracted_;
    Queues queues_;
    std::vector<std::int32_t> in_pick_;  // per super-vertex, index into picked
    std::vector<Weight> pick_cost_;      // per pick, its cost when chosen
    std::vector<Vertex> stack_;
    std::vector<Vertex> cycle_;
    SolveResult result_;
};

extern template class TarjanSolver<MatrixQueueSet>;
extern template class TarjanSolver<LazyHeapQueueSet>;
extern template class TarjanSolver<SilQueueSet>;

std::unique_ptr<Solver> make_tarjan_solver(const Graph& graph, QueueStrategy strategy, const SolveOptions& options = {});

SolveResult tarjan_solve(const Graph& graph, QueueStrategy strategy, const SolveOptions& options = {});

}  // namespace dmst
