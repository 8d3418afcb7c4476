#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dmst/graph.hpp"
#include "dmst/solve_result.hpp"

namespace dmst {

/// Common surface of the arborescence solvers. Construction builds the data
/// structures (init phase), run() executes the main algorithm, and the
/// destructor releases the solver state. The graph must outlive the solver.
class Solver {
public:
    virtual ~Solver() = default;

    /// Throws InfeasibleError or TimeoutError.
    virtual void run() = 0;
    [[nodiscard]] virtual const SolveResult& result() const = 0;
};

enum class Algorithm { Ggst, TarjanMatrix, TarjanHeap, TarjanSil };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::Ggst, Algorithm::TarjanMatrix, Algorithm::TarjanHeap,
                                               Algorithm::TarjanSil};

std::string_view to_string(Algorithm algorithm);
/// Accepts "ggst", "tarjan-matrix", "tarjan-heap" and "tarjan-sil".
std::optional<Algorithm> parse_algorithm(std::string_view name);

std::unique_ptr<Solver> make_solver(Algorithm algorithm, const Graph& graph, const SolveOptions& options = {});

/// Runs the main phase only.
SolveResult solve(const Graph& graph, Algorithm algorithm, const SolveOptions& options = {});

}  // namespace dmst
