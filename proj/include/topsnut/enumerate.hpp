#pragma once

#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

bool graphs_isomorphic(const Graph& a, const Graph& b);

// Every simple graph on n vertices up to isomorphism (n <= 8).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

// Every tree on n vertices up to isomorphism (n <= 12).
std::vector<Graph> all_trees(int n);

}  // namespace topsnut
