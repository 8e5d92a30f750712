#pragma once

#include <map>
#include <utility>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

namespace topsnut {

// Labelled-graph pair returned by the merge/extension builders.
struct LabelledGraph {
    Graph graph;
    Labelling labelling;
};

// Zig-zag assignment along the spine; result passes set-ordered-graceful.
Labelling construct_set_ordered_graceful_caterpillar(const Graph& t);

// f1(x)=2f(x) on the low side, f2(y)=2f(y)-1 on the high side, edges
// recomputed as differences; result passes set-ordered-odd-graceful.
Labelling graceful_to_odd_graceful(const Graph& t, const Labelling& f);

// Attach leaf_plan[v] fresh leaves to each listed vertex of a caterpillar
// carrying a set-ordered odd-graceful labelling; new edges take fresh odd
// labels, old labels shift by twice the number of new leaves.
LabelledGraph extend_caterpillar_to_lobster(const Graph& t, const Labelling& g,
                                            const std::map<VertexId, int>& leaf_plan);

// Mirror labelling with f(uv)+g(uv) = q+1 on every edge.
Labelling image_labelling(const Graph& t, const Labelling& f);
// Odd variant: f(uv)+g(uv) = 2q.
Labelling image_labelling_odd(const Graph& t, const Labelling& f);

// Edge-magic pair built from two set-ordered graceful trees on p vertices:
// g1 bijects onto [1,2p-1] with vertices low, h2 with vertices high; the two
// label sets complement each other around the shared value p.
std::pair<Labelling, Labelling> reciprocal_inverse_pair(const Graph& t1, const Labelling& f1,
                                                        const Graph& t2, const Labelling& f2);

// Total labelling passing all six clauses of the 6c scheme, with magic
// constant p.
Labelling six_c_from_set_ordered_graceful(const Graph& t, const Labelling& f);

// Checks the complementary-value conditions between two total labellings and
// merges the two vertices carrying the shared central value.
LabelledGraph six_c_complementary_matching(const Graph& g, const Labelling& f, const Graph& h,
                                           const Labelling& fprime);

// Validates a twin pair (odd-graceful on g over [0,2q-1]; partner over
// [1,2q] with odd difference edges) and coincides equal-valued vertices.
LabelledGraph twin_odd_graceful(const Graph& g, const Labelling& f, const Graph& h,
                                const Labelling& fprime);

// The derived equivalents of one set-ordered graceful labelling, each paired
// with the scheme it must pass. k,d parameterize the two sequence schemes.
std::vector<std::pair<Scheme, Labelling>> equivalence_suite(const Graph& t, const Labelling& f,
                                                            long long k, long long d);

}  // namespace topsnut
