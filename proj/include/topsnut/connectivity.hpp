#pragma once

#include <optional>
#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

int kappa(const Graph& g);        // vertex connectivity (n-1 for complete graphs)
int kappa_prime(const Graph& g);  // edge connectivity

// Smallest k such that splitting some k vertices disconnects the graph with
// every piece keeping a non-split vertex. Equals kappa except on complete
// graphs, where no split set qualifies and the result is empty.
struct SplitConnectivity {
    std::optional<int> gamma;
    int kappa;
};
SplitConnectivity v_split_connectivity(const Graph& g, int cap = 12);

// Edge analogue: smallest edge set whose splitting disconnects the graph with
// every piece keeping a vertex that is no end of a split edge.
std::optional<int> e_split_connectivity(const Graph& g, int cap = 12);

// Literal semantics used to validate the two shortcuts above on small graphs:
// enumerate every copy assignment of the split vertices / split-edge ends.
bool v_split_set_disconnects(const Graph& g, const std::vector<VertexId>& s);
bool e_split_set_disconnects(const Graph& g, const std::vector<int>& edge_idx);
std::optional<int> v_split_connectivity_literal(const Graph& g);
std::optional<int> e_split_connectivity_literal(const Graph& g);

}  // namespace topsnut
