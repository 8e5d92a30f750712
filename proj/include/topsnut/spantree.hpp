#pragma once

#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

struct SpanningTree {
    Graph tree;                            // same vertex ids as the input
    std::vector<VertexId> dominating_set;  // connected dominating set, ascending
};

// grow from a maximum-degree vertex, expanding the largest-degree tree leaf
// that still reaches new territory; stragglers attach to the tree vertex of
// highest tree-degree among their neighbors (ties: smallest id everywhere)
SpanningTree spanning_tree_max_leaf(const Graph& g);

// pendant trick: force the listed vertices into the dominating set
std::vector<VertexId> spanning_tree_predefined(const Graph& g, const std::vector<VertexId>& forced);

// union the closed neighborhoods of all degree >= k vertices first, then
// attach the rest breadth-first preferring high-degree neighbors
Graph spanning_tree_degree_preserve(const Graph& g, int k);

bool is_spanning_tree(const Graph& g, const Graph& t);
bool is_connected_dominating_set(const Graph& g, const std::vector<VertexId>& s);

}  // namespace topsnut
