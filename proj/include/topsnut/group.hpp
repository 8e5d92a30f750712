#pragma once

#include <map>
#include <string>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

namespace topsnut {

// Family of n labellings of one base graph. Member i shifts every vertex
// label by i-1 mod n and keeps edge labels unchanged, so H_i + H_j - H_k
// lands on the member with index i+j-k mod n no matter which k plays zero.
struct EveryZeroGraphicGroup {
    Graph base;
    Labelling f;
    int n = 0;

    Labelling element(int i) const;         // i in [1,n]
    int add(int i, int j, int zero) const;  // result mapped into [1,n]
};

EveryZeroGraphicGroup build_group(const Graph& h, const Labelling& f, int n);

// Empty when closure, commutativity, associativity and the zero law hold
// under every choice of zero. Full-table check; meant for small n.
std::vector<std::string> group_axiom_failures(const EveryZeroGraphicGroup& grp);

// Element indices on the vertices and edges of a host graph obeying
// idx(uv) = idx(u) + idx(v) - zero (mod n) on every edge. The edge indices
// consume `sequence` in construction order.
struct GroupLabelling {
    Graph host;
    int n = 0;
    int zero = 1;
    std::map<VertexId, int> vertex_index;
    std::map<int, int> edge_index;  // edge index -> element index
    std::vector<int> sequence;
    bool proper_labelling = false;  // vertex indices all distinct
};

// edge rule, sequence coverage, index ranges; empty means valid
std::vector<std::string> group_labelling_failures(const GroupLabelling& gl);

// Star-by-star frontier colouring of a tree. The start vertex takes the
// zero element; each later star spends fresh sequence elements on all of
// its edges and solves the edge rule for the new vertex indices.
GroupLabelling tree_group_coloring(const Graph& t, const EveryZeroGraphicGroup& grp,
                                   const std::vector<int>& edge_sequence, int zero,
                                   VertexId start);

// Arithmetic-progression labelling of K_{m,n_cols}: the edge indices run
// a, a+b, a+2b, ... in row-major edge order, zero is the element a.
GroupLabelling complete_bipartite_group_labelling(int m, int n_cols,
                                                  const EveryZeroGraphicGroup& grp, int a,
                                                  int b);

// Unicyclic host: the cycle takes a searched colouring spending s_star,
// then every hanging tree is coloured star-by-star from its cycle root,
// spending its share of s in order. Cycle search covers cycles up to
// length 8.
GroupLabelling ring_like_group_labelling(const Graph& nr, const EveryZeroGraphicGroup& grp,
                                         const std::vector<int>& s,
                                         const std::vector<int>& s_star);

// --- file format: single line "group n <order> base <graph-file> <labelling-file>",
// paths relative to the file's directory
struct GroupFile {
    int n = 0;
    std::string graph_path, labelling_path;
};
GroupFile read_group_file(const std::string& path);
EveryZeroGraphicGroup load_group(const std::string& path);

}  // namespace topsnut
