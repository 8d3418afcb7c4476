#include "dmst/solver.hpp"

#include <stdexcept>

#include "dmst/ggst.hpp"
#include "dmst/tarjan.hpp"

namespace dmst {

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Ggst: return "ggst";
        case Algorithm::TarjanMatrix: return "tarjan-matrix";
        case Algorithm::TarjanHeap: return "tarjan-heap";
        case Algorithm::TarjanSil: return "tarjan-sil";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const Algorithm a : kAllAlgorithms) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::unique_ptr<Solver> make_solver(Algorithm algorithm, const Graph& graph, const SolveOptions& options) {
    switch (algorithm) {
        case Algorithm::Ggst: return std::make_unique<GgstSolver>(graph, options);
        case Algorithm::TarjanMatrix: return make_tarjan_solver(graph, QueueStrategy::Matrix, options);
        case Algorithm::TarjanHeap: return make_tarjan_solver(graph, QueueStrategy::LazyHeap, options);
        case Algorithm::TarjanSil: return make_tarjan_solver(graph, QueueStrategy::SmallerIntoLarger, options);
    }
    throw std::invalid_argument("unknown algorithm");
}

SolveResult solve(const Graph& graph, Algorithm algorithm, const SolveOptions& options) {
    auto solver = make_solver(algorithm, graph, options);
    solver->run();
    return solver->result();
}

}  // namespace dmst
