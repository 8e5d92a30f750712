#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/group.hpp"

namespace topsnut {

// One block per host vertex and per host edge, vertex blocks first, both in
// id order. Every block is a copy of the group base carrying the element
// the colouring picked for its host item.
struct BlockRef {
    bool edge_block = false;
    int host_id = 0;
    int element = 1;
};

// Join edge between two flattened blocks. Labels run 1..2|E(host)| in host
// edge order, so they always form a consecutive set.
struct JoinEdge {
    int from_block = 0, to_block = 0;
    VertexId a_local = 0, b_local = 0;
    int label = 0;
};

// Picks the two local attachment vertices of a join from the base graph and
// the join ordinal. The default attaches the smallest vertex id on both
// sides.
using JoinPolicy = std::function<std::pair<VertexId, VertexId>(const Graph& base, int ordinal)>;
JoinPolicy smallest_vertex_join();

struct EncryptedNetwork {
    Graph host;
    EveryZeroGraphicGroup grp;
    GroupLabelling assignment;
    std::vector<BlockRef> blocks;
    std::vector<JoinEdge> joins;
    Graph expanded;

    int block_of_vertex(VertexId v) const { return v; }
    int block_of_edge(int e) const { return host.vertex_count() + e; }
    int block_offset(int b) const { return b * grp.base.vertex_count(); }
};

EncryptedNetwork encrypt_network(const Graph& g, const EveryZeroGraphicGroup& grp,
                                 const GroupLabelling& coloring,
                                 const JoinPolicy& policy = smallest_vertex_join());

// block and join counts, join pattern per host edge, flattened sizes,
// colouring validity; empty means all invariants hold
std::vector<std::string> network_invariant_failures(const EncryptedNetwork& net);

// Walk step: a host edge entered from one of its endpoints.
struct WalkStep {
    int edge = 0;
    VertexId from = 0;
};

// Search-discovery order from the smallest vertex; every host edge once.
std::vector<WalkStep> default_edge_walk(const Graph& host);

// Emission: one component per visited block and per join edge, with exact
// byte accounting (one byte = one rendered character). Blocks render by the
// given matrix route; joins render as endpoint label, join label, endpoint
// label.
struct EmitComponent {
    std::string name;
    std::string text;
    int length = 0;
};
struct NetworkEmission {
    std::vector<EmitComponent> components;
    int total = 0;
    std::string rendered() const;
};
NetworkEmission emit_tbpaw(const EncryptedNetwork& net, const std::vector<WalkStep>& walk,
                           const std::string& route);

// Spans the dominating set first, then hangs every remaining vertex off
// its smallest dominating neighbour.
Graph tree_from_dominating_set(const Graph& g, const std::vector<VertexId>& dom);

// --- snapshot file: header "t <timestep>" then the plain graph format
Graph read_snapshot(std::istream& in, long long& t);
Graph load_snapshot(const std::string& path, long long& t);
void save_snapshot(const std::string& path, const Graph& g, long long t);

// Snapshot -> spanning tree (algorithms A, B or C) -> seeded colouring ->
// encrypted network -> emission. Identical inputs give identical strings.
struct PipelineResult {
    Graph snapshot;
    long long timestep = 0;
    Graph tree;
    GroupLabelling coloring;
    EncryptedNetwork net;
    NetworkEmission emission;
};
PipelineResult pipeline_encrypt(const Graph& snapshot, long long timestep,
                                const EveryZeroGraphicGroup& grp, char tree_algo,
                                std::uint64_t seed);

// Self-similar generations: every block of one generation expands into a
// block per base vertex and edge of the next, coloured under its own
// element as zero; join edges persist across generations.
struct SelfJoin {
    int id = 0;
    int label = 0;
    int from_block = 0, to_block = 0;
    VertexId a_local = 0, b_local = 0;
};
struct SelfBlock {
    int element = 1;
};
struct SelfGeneration {
    std::vector<SelfBlock> blocks;
    std::vector<SelfJoin> joins;
    Graph flattened;
    long long labelled_edge_count = 0;
};
struct SelfSimilarSeries {
    Graph base;
    int n = 0;
    std::vector<SelfGeneration> generations;
    // colouring used for blocks holding element e (zero = e)
    GroupLabelling self_coloring(int e) const;
    EveryZeroGraphicGroup grp;
};
SelfSimilarSeries self_similar_generate(const Graph& h, const Labelling& f,
                                        const EveryZeroGraphicGroup& grp, int steps,
                                        const JoinPolicy& policy = smallest_vertex_join());

// Shift-indexed family of encrypted networks over one group-labelled net.
struct NetworkGroup {
    EncryptedNetwork base;
    int n = 0;
    GroupLabelling element(int i) const;  // assignment shifted by i-1
    int add(int i, int j, int zero) const;
};
NetworkGroup derived_group_from_network(const EncryptedNetwork& net);
std::vector<std::string> network_group_axiom_failures(const NetworkGroup& ng);

// --- dump: host edges, block assignments, join edges; plain text
void write_network(std::ostream& os, const EncryptedNetwork& net);

}  // namespace topsnut
