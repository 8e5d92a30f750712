#pragma once

#include <map>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

namespace topsnut {

// Set-valued labels; the scalar maps carry the mixed variants (integer edge
// labels next to vertex sets and vice versa). Sets are kept sorted ascending.
struct SetLabelling {
    std::map<VertexId, std::vector<int>> vertex_sets;
    std::map<int, std::vector<int>> edge_sets;
    std::map<VertexId, int> vertex_values;
    std::map<int, int> representatives;  // edge index -> representative
};

// Leaf-peeling construction: the k-th rebuilt edge carries representative k
// (2k-1 in odd mode); every vertex set is contained in [1,q] (odd: [1,2q-1]).
SetLabelling intersection_set_labelling(const Graph& t, bool odd);

// Interval families R_k = [1, L_k].
struct RainbowSpec {
    enum class Kind { regular, odd, fibonacci, tau_term };
    Kind kind = Kind::regular;
    int tau = 2;
    std::vector<long long> seeds;  // tau_term: the first tau lengths
};

// First `count` interval lengths of the family; lengths must be distinct.
std::vector<long long> rainbow_lengths(const RainbowSpec& spec, int count);

// Nested-interval assignment: the anchor leaf takes the largest interval and
// sets shrink with distance from it; every edge set equals the smaller
// endpoint set.
SetLabelling rainbow_set_labelling(const Graph& t, const RainbowSpec& spec);
SetLabelling rainbow_set_labelling(const Graph& t, const RainbowSpec& spec, VertexId anchor);

VerificationReport verify_rainbow(const Graph& t, const SetLabelling& SL,
                                  const RainbowSpec& spec);

// scheme names: total-set-labelling, vertex-set-labelling, edge-set-labelling,
// v-set-e-proper, e-set-v-proper, graceful-intersection, odd-graceful-intersection
VerificationReport verify_set(const Graph& g, const SetLabelling& SL, const Scheme& scheme);

}  // namespace topsnut
