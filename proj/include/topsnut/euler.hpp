#pragma once

#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

// Cycles are closed vertex sequences (first vertex not repeated at the end);
// paths are open vertex sequences. Both decompositions partition E(g) and are
// deterministic in the stored edge order.
std::vector<std::vector<VertexId>> euler_cycle_decomposition(const Graph& g);
std::vector<std::vector<VertexId>> non_euler_path_decomposition(const Graph& g);

}  // namespace topsnut
