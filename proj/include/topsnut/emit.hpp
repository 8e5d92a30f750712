#pragma once

#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/token.hpp"

namespace topsnut {

// At most one vertex of degree three or more.
bool spider_shape(const Graph& g);

// Neighbor order inside blocks: up lists labels ascending, down descending.
enum class Sweep { up, down };

// Plain walks. Paths start at the end with the smaller label; cycles start
// at the smallest label and head toward its smaller-labelled neighbor. The
// cycle forms close with the start label (vev: closing edge first).
TbPaw emit_vv_path(const Graph& g, const Labelling& L);
TbPaw emit_vev_path(const Graph& g, const Labelling& L);

// Same forms along an explicit vertex sequence; consecutive vertices must
// be adjacent.
TbPaw emit_vv_walk(const Graph& g, const Labelling& L, const std::vector<VertexId>& seq);
TbPaw emit_vev_walk(const Graph& g, const Labelling& L, const std::vector<VertexId>& seq);
TbPaw emit_vv_cycle(const Graph& g, const Labelling& L);
TbPaw emit_vev_cycle(const Graph& g, const Labelling& L);

// Explicit block form shared by the census tests. A block renders as the
// spine label, its members (vev: edge label then member label), then the
// spine label again; the last block of a path drops the trailing wrap.
// Cycles wrap every block, join consecutive blocks with the connecting edge
// label in vev form, and repeat the first block verbatim at the end.
struct Block {
    VertexId spine;
    std::vector<VertexId> members;
};
TbPaw emit_vv_blocks(const Graph& g, const Labelling& L,
                     const std::vector<Block>& blocks, bool cycle);
TbPaw emit_vev_blocks(const Graph& g, const Labelling& L,
                      const std::vector<Block>& blocks, bool cycle);

// Caterpillar spine blocks. Members are the pendant leaves plus the next
// spine vertex; a leafless spine vertex keeps its predecessor too. The spine
// runs from its smaller-labelled end.
TbPaw emit_vv_neighbor(const Graph& g, const Labelling& L, Sweep sweep);
TbPaw emit_vev_neighbor(const Graph& g, const Labelling& L, Sweep sweep);

// Cycle with pendant leaves. The cut ends carry each other as members, and
// rotation picks which block starts; the start block returns verbatim at the
// end.
TbPaw emit_vv_sun(const Graph& g, const Labelling& L, Sweep sweep, int rotation = 0);
TbPaw emit_vev_sun(const Graph& g, const Labelling& L, Sweep sweep, int rotation = 0);

// Spider: the body, its pendant leaves wrapped in the body label, then each
// leg walked outward behind a body (vev: body and edge) prefix.
TbPaw emit_vv_spider(const Graph& g, const Labelling& L, Sweep sweep);
TbPaw emit_vev_spider(const Graph& g, const Labelling& L, Sweep sweep);

// Two-level blocks for lobsters: each spine vertex lists its own leaves,
// then each mid-level neighbor with its leaves, closing on the spine label.
TbPaw emit_vv_lobster(const Graph& g, const Labelling& L, Sweep sweep);
TbPaw emit_vev_lobster(const Graph& g, const Labelling& L, Sweep sweep);

// Rooted tour from a hub vertex (default: highest degree, smallest label on
// ties). Children follow ascending labels; the hub label reappears before
// each child group, where consecutive pendant children share one group.
// Inside subtrees nothing is re-emitted.
TbPaw emit_vev_hub(const Graph& g, const Labelling& L);
TbPaw emit_vev_hub(const Graph& g, const Labelling& L, VertexId hub);

// Even-degree graphs concatenate their cycle decomposition; anything else
// concatenates the open-trail decomposition.
TbPaw emit_vev_euler(const Graph& g, const Labelling& L);

// Five edge relabellings over one vertex bijection onto [0,p-1]:
//   1. complementary sums with f(E) = [1,q]
//   2. complementary sums with f(E) = [p,p+q-1]
//   3. endpoint sums mod q
//   4. |sum - label| constant, smallest constant, f(E) = [1,q]
//   5. odd labels with edge totals filling one q-window
// Throws SchemeViolation when a rule cannot hold for this bijection.
std::vector<Labelling> multiple_meaning_labellings(const Graph& g, const Labelling& L);

// Hub tours of the five relabellings.
std::vector<TbPaw> multiple_meaning_emit(const Graph& g, const Labelling& L);
std::vector<TbPaw> multiple_meaning_emit(const Graph& g, const Labelling& L, VertexId hub);

}  // namespace topsnut
