#pragma once

#include <cstdint>

#include "dmst/graph.hpp"

namespace dmst {

/// Worst case for solvers that merge plain incoming-edge lists. Vertices
/// v_0..v_{k-1} plus root r = k:
///   v_i -> v_{i+1} weight 0   (i = 0..k-2)
///   v_i -> v_0     weight i   (i = 1..k-1)
///   r   -> v_0     weight k
/// Solving it contracts k-1 nested cycles, each of which still has every
/// remaining back edge pointing into it. Requires k >= 3.
Graph gen_antilemon(Vertex k);

/// Random instance rooted at 0 that always admits an arborescence: a random
/// spanning arborescence (every vertex after the root, in a random order, gets
/// an edge from a uniformly chosen earlier vertex) plus m - (n-1) uniformly
/// random extra edges, all shuffled, weights uniform in [1, max_w].
/// Requires n >= 1, n - 1 <= m and max_w >= 1.
Graph gen_er_rooted(Vertex n, EdgeId m, Weight max_w, std::uint64_t seed);

}  // namespace dmst
