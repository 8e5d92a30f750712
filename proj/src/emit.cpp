#include "topsnut/emit.hpp"

#include <algorithm>
#include <functional>

#include "topsnut/error.hpp"
#include "topsnut/euler.hpp"

namespace topsnut {
namespace {

int vlab(const Labelling& L, VertexId v) {
    auto it = L.vertex.find(v);
    if (it == L.vertex.end()) fail("MissingLabel", "vertex " + std::to_string(v));
    return it->second;
}

int elab(const Graph& g, const Labelling& L, VertexId u, VertexId v) {
    auto ei = g.edge_index(u, v);
    if (!ei) fail("MissingLabel", "no edge " + std::to_string(u) + "-" + std::to_string(v));
    auto it = L.edge.find(*ei);
    if (it == L.edge.end()) fail("MissingLabel", "edge " + std::to_string(*ei));
    return it->second;
}

void by_label(std::vector<VertexId>& vs, const Labelling& L, Sweep sweep) {
    std::stable_sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
        return sweep == Sweep::up ? vlab(L, a) < vlab(L, b) : vlab(L, a) > vlab(L, b);
    });
}

std::vector<VertexId> path_order(const Graph& g, const Labelling& L) {
    if (!g.is_tree() || g.max_degree() > 2) fail("BadShape", "not a path");
    const int n = g.vertex_count();
    if (n == 1) return {0};
    VertexId start = -1;
    for (VertexId v : g.leaves())
        if (start < 0 || vlab(L, v) < vlab(L, start)) start = v;
    std::vector<VertexId> order = {start};
    VertexId prev = -1, cur = start;
    while ((int)order.size() < n) {
        for (VertexId nb : g.neighbors(cur)) {
            if (nb != prev) {
                order.push_back(nb);
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    return order;
}

std::vector<VertexId> cycle_order(const Graph& g, const Labelling& L) {
    const int n = g.vertex_count();
    if (!g.connected() || g.edge_count() != n || g.max_degree() != 2)
        fail("BadShape", "not a cycle");
    VertexId start = 0;
    for (VertexId v = 1; v < n; ++v)
        if (vlab(L, v) < vlab(L, start)) start = v;
    auto nbs = g.neighbors(start);
    VertexId next = vlab(L, nbs[0]) <= vlab(L, nbs[1]) ? nbs[0] : nbs[1];
    std::vector<VertexId> order = {start, next};
    VertexId prev = start, cur = next;
    while ((int)order.size() < n) {
        for (VertexId nb : g.neighbors(cur)) {
            if (nb != prev) {
                order.push_back(nb);
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    return order;
}

// Spine of a caterpillar (or bare path): the non-leaf vertices walked from
// the smaller-labelled end. Stars give the single centre; K2 and K1 keep
// the smaller-labelled vertex as a one-vertex spine.
std::vector<VertexId> caterpillar_spine(const Graph& g, const Labelling& L) {
    auto cls = classify_tree(g);
    if (cls.kind != TreeKind::path && cls.kind != TreeKind::caterpillar)
        fail("BadShape", "not a caterpillar");
    const int n = g.vertex_count();
    std::vector<VertexId> internal;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) >= 2) internal.push_back(v);
    if (internal.empty()) {
        VertexId best = 0;
        for (VertexId v = 1; v < n; ++v)
            if (vlab(L, v) < vlab(L, best)) best = v;
        return {best};
    }
    if (internal.size() == 1) return internal;
    std::vector<char> in_spine(n, 0);
    for (VertexId v : internal) in_spine[v] = 1;
    auto internal_degree = [&](VertexId v) {
        int d = 0;
        for (VertexId nb : g.neighbors(v)) d += in_spine[nb];
        return d;
    };
    std::vector<VertexId> ends;
    for (VertexId v : internal)
        if (internal_degree(v) <= 1) ends.push_back(v);
    VertexId start = ends[0];
    for (VertexId v : ends)
        if (vlab(L, v) < vlab(L, start)) start = v;
    std::vector<VertexId> spine = {start};
    VertexId prev = -1, cur = start;
    while ((int)spine.size() < (int)internal.size()) {
        for (VertexId nb : g.neighbors(cur)) {
            if (in_spine[nb] && nb != prev) {
                spine.push_back(nb);
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    return spine;
}

std::vector<Block> caterpillar_blocks(const Graph& g, const Labelling& L, Sweep sweep) {
    auto spine = caterpillar_spine(g, L);
    std::vector<char> in_spine(g.vertex_count(), 0);
    for (VertexId v : spine) in_spine[v] = 1;
    std::vector<Block> blocks;
    for (int i = 0; i < (int)spine.size(); ++i) {
        Block b{spine[i], {}};
        for (VertexId nb : g.neighbors(spine[i]))
            if (!in_spine[nb]) b.members.push_back(nb);
        const bool leafless = b.members.empty();
        if (i + 1 < (int)spine.size()) b.members.push_back(spine[i + 1]);
        if (leafless && i > 0) b.members.push_back(spine[i - 1]);
        by_label(b.members, L, sweep);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<Block> sun_blocks(const Graph& g, const Labelling& L, Sweep sweep) {
    std::vector<VertexId> ring;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) ring.push_back(v);
    // ring edges plus one edge per leaf: q == p exactly
    if ((int)ring.size() < 3 || g.edge_count() != g.vertex_count() || !g.connected())
        fail("BadShape", "not a cycle with pendant leaves");
    std::vector<char> on_ring(g.vertex_count(), 0);
    for (VertexId v : ring) on_ring[v] = 1;
    for (VertexId v : ring) {
        int d = 0;
        for (VertexId nb : g.neighbors(v)) d += on_ring[nb];
        if (d != 2) fail("BadShape", "not a cycle with pendant leaves");
    }
    VertexId start = ring[0];
    for (VertexId v : ring)
        if (vlab(L, v) < vlab(L, start)) start = v;
    std::vector<VertexId> ring_nbs;
    for (VertexId nb : g.neighbors(start))
        if (on_ring[nb]) ring_nbs.push_back(nb);
    VertexId next =
        vlab(L, ring_nbs[0]) <= vlab(L, ring_nbs[1]) ? ring_nbs[0] : ring_nbs[1];
    std::vector<VertexId> order = {start, next};
    VertexId prev = start, cur = next;
    while ((int)order.size() < (int)ring.size()) {
        for (VertexId nb : g.neighbors(cur)) {
            if (on_ring[nb] && nb != prev) {
                order.push_back(nb);
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    std::vector<Block> blocks;
    for (int i = 0; i < (int)order.size(); ++i) {
        Block b{order[i], {}};
        for (VertexId nb : g.neighbors(order[i]))
            if (!on_ring[nb]) b.members.push_back(nb);
        // the cut ends list each other
        if (i == 0) b.members.push_back(order.back());
        if (i + 1 == (int)order.size()) b.members.push_back(order.front());
        by_label(b.members, L, sweep);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace

bool spider_shape(const Graph& g) {
    int big = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) ++big;
    return big <= 1;
}

TbPaw emit_vv_path(const Graph& g, const Labelling& L) {
    TbPaw out;
    for (VertexId v : path_order(g, L)) out.push_back(Token::num(vlab(L, v)));
    return out;
}

TbPaw emit_vev_path(const Graph& g, const Labelling& L) {
    auto order = path_order(g, L);
    TbPaw out = {Token::num(vlab(L, order[0]))};
    for (int i = 1; i < (int)order.size(); ++i) {
        out.push_back(Token::num(elab(g, L, order[i - 1], order[i])));
        out.push_back(Token::num(vlab(L, order[i])));
    }
    return out;
}

namespace {

void check_walk(const Graph& g, const std::vector<VertexId>& seq) {
    if (seq.empty()) fail("BadWalk", "empty vertex sequence");
    for (VertexId v : seq)
        if (v < 0 || v >= g.vertex_count()) fail("BadWalk", "vertex out of range");
    for (int i = 1; i < (int)seq.size(); ++i)
        if (!g.edge_index(seq[i - 1], seq[i]))
            fail("BadWalk", "consecutive vertices not adjacent");
}

}  // namespace

TbPaw emit_vv_walk(const Graph& g, const Labelling& L, const std::vector<VertexId>& seq) {
    check_walk(g, seq);
    TbPaw out;
    for (VertexId v : seq) out.push_back(Token::num(vlab(L, v)));
    return out;
}

TbPaw emit_vev_walk(const Graph& g, const Labelling& L, const std::vector<VertexId>& seq) {
    check_walk(g, seq);
    TbPaw out = {Token::num(vlab(L, seq[0]))};
    for (int i = 1; i < (int)seq.size(); ++i) {
        out.push_back(Token::num(elab(g, L, seq[i - 1], seq[i])));
        out.push_back(Token::num(vlab(L, seq[i])));
    }
    return out;
}

TbPaw emit_vv_cycle(const Graph& g, const Labelling& L) {
    auto order = cycle_order(g, L);
    TbPaw out;
    for (VertexId v : order) out.push_back(Token::num(vlab(L, v)));
    out.push_back(Token::num(vlab(L, order[0])));
    return out;
}

TbPaw emit_vev_cycle(const Graph& g, const Labelling& L) {
    auto order = cycle_order(g, L);
    TbPaw out = {Token::num(vlab(L, order[0]))};
    for (int i = 1; i < (int)order.size(); ++i) {
        out.push_back(Token::num(elab(g, L, order[i - 1], order[i])));
        out.push_back(Token::num(vlab(L, order[i])));
    }
    out.push_back(Token::num(elab(g, L, order.back(), order[0])));
    out.push_back(Token::num(vlab(L, order[0])));
    return out;
}

TbPaw emit_vv_blocks(const Graph& g, const Labelling& L,
                     const std::vector<Block>& blocks, bool cycle) {
    (void)g;
    TbPaw out;
    auto one = [&](const Block& b, bool wrap) {
        out.push_back(Token::num(vlab(L, b.spine)));
        for (VertexId m : b.members) out.push_back(Token::num(vlab(L, m)));
        if (wrap) out.push_back(Token::num(vlab(L, b.spine)));
    };
    for (int i = 0; i < (int)blocks.size(); ++i)
        one(blocks[i], cycle || i + 1 < (int)blocks.size());
    if (cycle && !blocks.empty()) one(blocks[0], true);
    return out;
}

TbPaw emit_vev_blocks(const Graph& g, const Labelling& L,
                      const std::vector<Block>& blocks, bool cycle) {
    TbPaw out;
    auto one = [&](const Block& b, bool wrap) {
        out.push_back(Token::num(vlab(L, b.spine)));
        for (VertexId m : b.members) {
            out.push_back(Token::num(elab(g, L, b.spine, m)));
            out.push_back(Token::num(vlab(L, m)));
        }
        if (wrap) out.push_back(Token::num(vlab(L, b.spine)));
    };
    for (int i = 0; i < (int)blocks.size(); ++i) {
        if (i > 0 && cycle)
            out.push_back(Token::num(elab(g, L, blocks[i - 1].spine, blocks[i].spine)));
        one(blocks[i], cycle || i + 1 < (int)blocks.size());
    }
    if (cycle && !blocks.empty()) one(blocks[0], true);
    return out;
}

TbPaw emit_vv_neighbor(const Graph& g, const Labelling& L, Sweep sweep) {
    return emit_vv_blocks(g, L, caterpillar_blocks(g, L, sweep), false);
}

TbPaw emit_vev_neighbor(const Graph& g, const Labelling& L, Sweep sweep) {
    return emit_vev_blocks(g, L, caterpillar_blocks(g, L, sweep), false);
}

TbPaw emit_vv_sun(const Graph& g, const Labelling& L, Sweep sweep, int rotation) {
    auto blocks = sun_blocks(g, L, sweep);
    std::rotate(blocks.begin(),
                blocks.begin() + ((rotation % (int)blocks.size() + (int)blocks.size()) %
                                  (int)blocks.size()),
                blocks.end());
    return emit_vv_blocks(g, L, blocks, true);
}

TbPaw emit_vev_sun(const Graph& g, const Labelling& L, Sweep sweep, int rotation) {
    auto blocks = sun_blocks(g, L, sweep);
    std::rotate(blocks.begin(),
                blocks.begin() + ((rotation % (int)blocks.size() + (int)blocks.size()) %
                                  (int)blocks.size()),
                blocks.end());
    return emit_vev_blocks(g, L, blocks, true);
}

namespace {

struct SpiderParts {
    VertexId body;
    std::vector<VertexId> leaves;             // pendant body neighbors
    std::vector<std::vector<VertexId>> legs;  // outward chains, >= 2 vertices
};

SpiderParts spider_parts(const Graph& g, const Labelling& L, Sweep sweep) {
    if (!g.is_tree() || !spider_shape(g)) fail("BadShape", "not a spider");
    VertexId body = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) body = v;
    if (body < 0) fail("BadShape", "spider needs a branch vertex");
    SpiderParts parts{body, {}, {}};
    for (VertexId nb : g.neighbors(body)) {
        if (g.degree(nb) == 1) {
            parts.leaves.push_back(nb);
            continue;
        }
        std::vector<VertexId> leg = {nb};
        VertexId prev = body, cur = nb;
        while (true) {
            VertexId next = -1;
            for (VertexId w : g.neighbors(cur))
                if (w != prev) next = w;
            if (next < 0) break;
            leg.push_back(next);
            prev = cur;
            cur = next;
        }
        parts.legs.push_back(std::move(leg));
    }
    by_label(parts.leaves, L, sweep);
    std::stable_sort(parts.legs.begin(), parts.legs.end(), [&](const auto& a, const auto& b) {
        return sweep == Sweep::up ? vlab(L, a[0]) < vlab(L, b[0])
                                  : vlab(L, a[0]) > vlab(L, b[0]);
    });
    return parts;
}

}  // namespace

TbPaw emit_vv_spider(const Graph& g, const Labelling& L, Sweep sweep) {
    auto parts = spider_parts(g, L, sweep);
    const int body = vlab(L, parts.body);
    TbPaw out = {Token::num(body)};
    for (VertexId v : parts.leaves) out.push_back(Token::num(vlab(L, v)));
    out.push_back(Token::num(body));
    for (int i = 0; i < (int)parts.legs.size(); ++i) {
        if (i > 0) out.push_back(Token::num(body));
        for (VertexId v : parts.legs[i]) out.push_back(Token::num(vlab(L, v)));
    }
    return out;
}

TbPaw emit_vev_spider(const Graph& g, const Labelling& L, Sweep sweep) {
    auto parts = spider_parts(g, L, sweep);
    const int body = vlab(L, parts.body);
    TbPaw out = {Token::num(body)};
    for (VertexId v : parts.leaves) {
        out.push_back(Token::num(elab(g, L, parts.body, v)));
        out.push_back(Token::num(vlab(L, v)));
    }
    for (const auto& leg : parts.legs) {
        out.push_back(Token::num(body));
        out.push_back(Token::num(elab(g, L, parts.body, leg[0])));
        out.push_back(Token::num(vlab(L, leg[0])));
        for (int i = 1; i < (int)leg.size(); ++i) {
            out.push_back(Token::num(elab(g, L, leg[i - 1], leg[i])));
            out.push_back(Token::num(vlab(L, leg[i])));
        }
    }
    return out;
}

namespace {

std::vector<VertexId> pendant_neighbors(const Graph& g, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId nb : g.neighbors(v))
        if (g.degree(nb) == 1) out.push_back(nb);
    return out;
}

}  // namespace

TbPaw emit_vv_lobster(const Graph& g, const Labelling& L, Sweep sweep) {
    auto cls = classify_tree(g);
    if (cls.kind != TreeKind::path && cls.kind != TreeKind::caterpillar &&
        cls.kind != TreeKind::lobster)
        fail("BadShape", "not a lobster");
    Graph trimmed = delete_leaves(g);
    // spine of the trimmed caterpillar, under the same labelling
    std::vector<VertexId> spine;
    {
        std::vector<VertexId> internal;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (trimmed.degree(v) >= 1) internal.push_back(v);
        if (internal.empty()) {
            // a star or smaller: treat the busiest vertex as the whole spine
            VertexId best = 0;
            for (VertexId v = 1; v < g.vertex_count(); ++v)
                if (g.degree(v) > g.degree(best)) best = v;
            spine = {best};
        } else {
            Labelling sub;
            for (VertexId v : internal) sub.vertex[v] = vlab(L, v);
            spine = caterpillar_spine(trimmed, sub);
        }
    }
    std::vector<char> on_spine(g.vertex_count(), 0);
    for (VertexId v : spine) on_spine[v] = 1;

    TbPaw out;
    for (int i = 0; i < (int)spine.size(); ++i) {
        VertexId u = spine[i];
        out.push_back(Token::num(vlab(L, u)));
        auto own = pendant_neighbors(g, u);
        by_label(own, L, sweep);
        for (VertexId a : own) out.push_back(Token::num(vlab(L, a)));
        if (!own.empty()) out.push_back(Token::num(vlab(L, u)));
        std::vector<VertexId> mids;
        for (VertexId nb : g.neighbors(u))
            if (!on_spine[nb] && g.degree(nb) > 1) mids.push_back(nb);
        by_label(mids, L, sweep);
        for (VertexId m : mids) {
            out.push_back(Token::num(vlab(L, m)));
            auto ml = pendant_neighbors(g, m);
            by_label(ml, L, sweep);
            for (VertexId a : ml) out.push_back(Token::num(vlab(L, a)));
            out.push_back(Token::num(vlab(L, m)));
        }
        out.push_back(Token::num(vlab(L, u)));
    }
    return out;
}

TbPaw emit_vev_lobster(const Graph& g, const Labelling& L, Sweep sweep) {
    auto vv = [&](VertexId v) { return Token::num(vlab(L, v)); };
    auto ee = [&](VertexId a, VertexId b) { return Token::num(elab(g, L, a, b)); };
    auto cls = classify_tree(g);
    if (cls.kind != TreeKind::path && cls.kind != TreeKind::caterpillar &&
        cls.kind != TreeKind::lobster)
        fail("BadShape", "not a lobster");
    Graph trimmed = delete_leaves(g);
    std::vector<VertexId> spine;
    {
        std::vector<VertexId> internal;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (trimmed.degree(v) >= 1) internal.push_back(v);
        if (internal.empty()) {
            VertexId best = 0;
            for (VertexId v = 1; v < g.vertex_count(); ++v)
                if (g.degree(v) > g.degree(best)) best = v;
            spine = {best};
        } else {
            Labelling sub;
            for (VertexId v : internal) sub.vertex[v] = vlab(L, v);
            spine = caterpillar_spine(trimmed, sub);
        }
    }
    std::vector<char> on_spine(g.vertex_count(), 0);
    for (VertexId v : spine) on_spine[v] = 1;

    TbPaw out;
    for (int i = 0; i < (int)spine.size(); ++i) {
        VertexId u = spine[i];
        if (i > 0) out.push_back(ee(spine[i - 1], u));
        out.push_back(vv(u));
        auto own = pendant_neighbors(g, u);
        by_label(own, L, sweep);
        for (VertexId a : own) {
            out.push_back(ee(u, a));
            out.push_back(vv(a));
        }
        if (!own.empty()) out.push_back(vv(u));
        std::vector<VertexId> mids;
        for (VertexId nb : g.neighbors(u))
            if (!on_spine[nb] && g.degree(nb) > 1) mids.push_back(nb);
        by_label(mids, L, sweep);
        for (VertexId m : mids) {
            out.push_back(ee(u, m));
            out.push_back(vv(m));
            auto ml = pendant_neighbors(g, m);
            by_label(ml, L, sweep);
            for (VertexId a : ml) {
                out.push_back(ee(m, a));
                out.push_back(vv(a));
            }
            out.push_back(vv(m));
        }
        out.push_back(vv(u));
    }
    return out;
}

TbPaw emit_vev_hub(const Graph& g, const Labelling& L) {
    VertexId hub = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) > g.degree(hub) ||
            (g.degree(v) == g.degree(hub) && vlab(L, v) < vlab(L, hub)))
            hub = v;
    }
    return emit_vev_hub(g, L, hub);
}

TbPaw emit_vev_hub(const Graph& g, const Labelling& L, VertexId hub) {
    if (!g.is_tree()) fail("BadShape", "hub tour needs a tree");
    if (!g.has_vertex(hub)) fail("PlanTargetsUnknownVertex", "hub vertex missing");
    TbPaw out = {Token::num(vlab(L, hub))};

    std::function<void(VertexId, VertexId)> chain = [&](VertexId v, VertexId parent) {
        out.push_back(Token::num(elab(g, L, parent, v)));
        out.push_back(Token::num(vlab(L, v)));
        auto kids = g.neighbors(v);
        kids.erase(std::remove(kids.begin(), kids.end(), parent), kids.end());
        by_label(kids, L, Sweep::up);
        for (VertexId k : kids) chain(k, v);
    };

    auto kids = g.neighbors(hub);
    by_label(kids, L, Sweep::up);
    bool first = true, prev_pendant = false;
    for (VertexId k : kids) {
        const bool pendant = g.degree(k) == 1;
        if (!first && !(pendant && prev_pendant))
            out.push_back(Token::num(vlab(L, hub)));
        chain(k, hub);
        first = false;
        prev_pendant = pendant;
    }
    return out;
}

TbPaw emit_vev_euler(const Graph& g, const Labelling& L) {
    bool even = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2) even = false;
    TbPaw out;
    auto walk = [&](const std::vector<VertexId>& seq, bool closed) {
        TbPaw d = {Token::num(vlab(L, seq[0]))};
        for (int i = 1; i < (int)seq.size(); ++i) {
            d.push_back(Token::num(elab(g, L, seq[i - 1], seq[i])));
            d.push_back(Token::num(vlab(L, seq[i])));
        }
        if (closed) {
            d.push_back(Token::num(elab(g, L, seq.back(), seq[0])));
            d.push_back(Token::num(vlab(L, seq[0])));
        }
        uplus_append(out, d);
    };
    if (even && g.edge_count() > 0) {
        for (const auto& cyc : euler_cycle_decomposition(g)) walk(cyc, true);
    } else {
        for (const auto& trail : non_euler_path_decomposition(g)) walk(trail, false);
    }
    return out;
}

namespace {

// endpoint sums per edge index
std::vector<int> edge_sums(const Graph& g, const Labelling& L) {
    std::vector<int> s;
    for (const Edge& e : g.edges()) s.push_back(vlab(L, e.u) + vlab(L, e.v));
    return s;
}

// sums must be q distinct consecutive values for the two complementary rules
void need_consecutive_sums(const std::vector<int>& s) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i + 1] != t[i] + 1)
            fail("SchemeViolation", "endpoint sums are not consecutive");
}

}  // namespace

std::vector<Labelling> multiple_meaning_labellings(const Graph& g, const Labelling& L) {
    const int p = g.vertex_count(), q = g.edge_count();
    if (q < 1) fail("SchemeViolation", "need at least one edge");
    std::vector<char> seen(p, 0);
    for (int v = 0; v < p; ++v) {
        int lab = vlab(L, v);
        if (lab < 0 || lab >= p || seen[lab])
            fail("SchemeViolation", "vertex labels must biject onto [0,p-1]");
        seen[lab] = 1;
    }
    std::vector<int> sums = edge_sums(g, L);
    int max_sum = *std::max_element(sums.begin(), sums.end());

    std::vector<Labelling> out(5);
    for (Labelling& M : out) M.vertex = L.vertex;

    need_consecutive_sums(sums);
    for (int e = 0; e < q; ++e) {
        out[0].edge[e] = max_sum + 1 - sums[e];
        out[1].edge[e] = max_sum + p - sums[e];
    }

    std::vector<char> res(q, 0);
    for (int e = 0; e < q; ++e) {
        int r = ((sums[e] % q) + q) % q;
        if (res[r]) fail("SchemeViolation", "endpoint sums collide mod q");
        res[r] = 1;
        out[2].edge[e] = r;
    }

    // smallest constant gap: try k = 0,1,... with a bipartite matching
    // edge -> value in [1,q], value = sum +- k
    {
        bool done = false;
        for (int k = 0; k <= 2 * (p + q) && !done; ++k) {
            std::vector<std::vector<int>> opts(q);
            for (int e = 0; e < q; ++e) {
                for (int val : {sums[e] - k, sums[e] + k})
                    if (val >= 1 && val <= q &&
                        (opts[e].empty() || opts[e].back() != val))
                        opts[e].push_back(val);
            }
            std::vector<int> owner(q + 1, -1);
            std::function<bool(int, std::vector<char>&)> kuhn = [&](int e,
                                                                    std::vector<char>& used) {
                for (int val : opts[e]) {
                    if (used[val]) continue;
                    used[val] = 1;
                    if (owner[val] < 0 || kuhn(owner[val], used)) {
                        owner[val] = e;
                        return true;
                    }
                }
                return false;
            };
            int matched = 0;
            for (int e = 0; e < q; ++e) {
                std::vector<char> used(q + 1, 0);
                if (kuhn(e, used)) ++matched;
            }
            if (matched == q) {
                for (int val = 1; val <= q; ++val)
                    if (owner[val] >= 0) out[3].edge[owner[val]] = val;
                done = true;
            }
        }
        if (!done) fail("SchemeViolation", "no constant-gap edge assignment exists");
    }

    // odd labels, edge totals filling a q-window: largest sums take the low
    // window slots first, backtracking on collisions
    {
        if (q > 20) fail("SizeLimitExceeded", "window search handles up to 20 edges");
        int min_sum = *std::min_element(sums.begin(), sums.end());
        std::vector<int> order(q);
        for (int e = 0; e < q; ++e) order[e] = e;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return sums[a] > sums[b]; });
        bool done = false;
        for (int a = min_sum + 1; a <= max_sum + q && !done; ++a) {
            std::vector<int> slot(q, -1);
            std::function<bool(int, unsigned, unsigned)> dfs = [&](int i, unsigned pos_mask,
                                                                   unsigned odd_mask) {
                if (i == q) return true;
                int e = order[i];
                for (int pos = 0; pos < q; ++pos) {
                    if (pos_mask & (1u << pos)) continue;
                    int o = a + pos - sums[e];
                    if (o < 1 || o > 2 * q - 1 || o % 2 == 0) continue;
                    unsigned bit = 1u << ((o - 1) / 2);
                    if (odd_mask & bit) continue;
                    slot[e] = o;
                    if (dfs(i + 1, pos_mask | (1u << pos), odd_mask | bit)) return true;
                }
                return false;
            };
            if (dfs(0, 0, 0)) {
                for (int e = 0; e < q; ++e) out[4].edge[e] = slot[e];
                done = true;
            }
        }
        if (!done) fail("SchemeViolation", "no odd window assignment exists");
    }
    return out;
}

std::vector<TbPaw> multiple_meaning_emit(const Graph& g, const Labelling& L) {
    std::vector<TbPaw> out;
    for (const Labelling& M : multiple_meaning_labellings(g, L))
        out.push_back(emit_vev_hub(g, M));
    return out;
}

std::vector<TbPaw> multiple_meaning_emit(const Graph& g, const Labelling& L, VertexId hub) {
    std::vector<TbPaw> out;
    for (const Labelling& M : multiple_meaning_labellings(g, L))
        out.push_back(emit_vev_hub(g, M, hub));
    return out;
}

}  // namespace topsnut
