#include "topsnut/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

// X = side carrying the smaller labels, each side sorted by label ascending
struct Sides {
    std::vector<VertexId> x, y;
};

Sides ordered_sides(const Graph& t, const Labelling& f, const char* scheme) {
    auto rep = verify(t, f, Scheme{scheme, {}});
    if (!rep.pass())
        fail("NotSetOrdered", std::string("labelling does not pass ") + scheme + " (" +
                                  rep.violations.front().clause + ")");
    auto parts = t.bipartition();
    Sides s;
    s.x = parts->first;
    s.y = parts->second;
    if (rep.facts.at("so_direction") == 1) std::swap(s.x, s.y);
    auto by_label = [&](VertexId a, VertexId b) { return f.vertex.at(a) < f.vertex.at(b); };
    std::sort(s.x.begin(), s.x.end(), by_label);
    std::sort(s.y.begin(), s.y.end(), by_label);
    return s;
}

Labelling with_difference_edges(const Graph& g, const Labelling& f) {
    Labelling out = f;
    out.edge.clear();
    fill_difference_edges(g, out);
    return out;
}

}  // namespace

Labelling construct_set_ordered_graceful_caterpillar(const Graph& t) {
    auto cls = classify_tree(t);
    if (cls.kind != TreeKind::path && cls.kind != TreeKind::caterpillar)
        fail("NotACaterpillar", "tree classifies as " + to_string(cls.kind));
    int p = t.vertex_count(), q = t.edge_count();
    Labelling L;
    if (p == 1) {
        L.vertex[0] = 0;
        return L;
    }

    std::vector<char> is_leaf(p, 0);
    for (VertexId v : t.leaves()) is_leaf[v] = 1;
    std::vector<VertexId> internal;
    for (VertexId v = 0; v < p; ++v)
        if (!is_leaf[v]) internal.push_back(v);

    std::vector<VertexId> spine;
    if (internal.empty()) {
        spine = {0};  // a single edge: treat one end as the whole spine
    } else if (internal.size() == 1) {
        spine = internal;
    } else {
        std::vector<char> in_spine(p, 0);
        for (VertexId v : internal) in_spine[v] = 1;
        VertexId start = -1;
        for (VertexId v : internal) {
            int inner = 0;
            for (VertexId w : t.neighbors(v)) inner += in_spine[w];
            if (inner == 1) {
                start = v;
                break;
            }
        }
        VertexId prev = -1, cur = start;
        while (cur != -1) {
            spine.push_back(cur);
            VertexId next = -1;
            for (VertexId w : t.neighbors(cur))
                if (in_spine[w] && w != prev) next = w;
            prev = cur;
            cur = next;
        }
    }

    std::vector<char> on_spine(p, 0);
    for (VertexId v : spine) on_spine[v] = 1;
    // walk the spine, interleaving each vertex with the pendant vertices of
    // the opposite side so every high-side block is consecutive
    std::vector<VertexId> xs, ys;
    for (size_t i = 0; i < spine.size(); ++i) {
        std::vector<VertexId> pendant;
        for (VertexId w : t.neighbors(spine[i]))
            if (!on_spine[w] && t.degree(w) == 1) pendant.push_back(w);
        if (i % 2 == 0) {
            xs.push_back(spine[i]);
            for (VertexId w : pendant) ys.push_back(w);
        } else {
            for (VertexId w : pendant) xs.push_back(w);
            ys.push_back(spine[i]);
        }
    }
    for (size_t i = 0; i < xs.size(); ++i) L.vertex[xs[i]] = (int)i;
    for (size_t j = 0; j < ys.size(); ++j) L.vertex[ys[j]] = q - (int)j;
    fill_difference_edges(t, L);
    return L;
}

Labelling graceful_to_odd_graceful(const Graph& t, const Labelling& f) {
    Sides s = ordered_sides(t, f, "set-ordered-graceful");
    Labelling out;
    for (VertexId x : s.x) out.vertex[x] = 2 * f.vertex.at(x);
    for (VertexId y : s.y) out.vertex[y] = 2 * f.vertex.at(y) - 1;
    fill_difference_edges(t, out);
    return out;
}

LabelledGraph extend_caterpillar_to_lobster(const Graph& t, const Labelling& g,
                                            const std::map<VertexId, int>& leaf_plan) {
    for (auto& [v, cnt] : leaf_plan) {
        if (!t.has_vertex(v))
            fail("PlanTargetsUnknownVertex", "vertex " + std::to_string(v));
        if (cnt < 0) fail("PlanTargetsUnknownVertex", "negative leaf count");
    }
    Sides s = ordered_sides(t, g, "set-ordered-odd-graceful");
    int m = 0;
    for (auto& [v, cnt] : leaf_plan) m += cnt;

    LabelledGraph out;
    out.graph = t;
    Labelling& L = out.labelling;
    for (VertexId x : s.x) L.vertex[x] = g.vertex.at(x);
    for (VertexId y : s.y) L.vertex[y] = g.vertex.at(y) + 2 * m;
    Labelling base = with_difference_edges(t, g);
    for (int i = 0; i < t.edge_count(); ++i) L.edge[i] = base.edge.at(i) + 2 * m;

    int next_odd = 1;
    auto attach = [&](VertexId host, bool x_side) {
        auto it = leaf_plan.find(host);
        int cnt = it == leaf_plan.end() ? 0 : it->second;
        for (int r = 0; r < cnt; ++r) {
            VertexId leaf = out.graph.add_vertex();
            out.graph.add_edge(host, leaf);
            int idx = out.graph.edge_count() - 1;
            L.edge[idx] = next_odd;
            next_odd += 2;
            L.vertex[leaf] =
                x_side ? L.edge[idx] + L.vertex.at(host) : L.vertex.at(host) - L.edge[idx];
        }
    };
    for (VertexId x : s.x) attach(x, true);
    for (auto it = s.y.rbegin(); it != s.y.rend(); ++it) attach(*it, false);
    return out;
}

Labelling image_labelling(const Graph& t, const Labelling& f) {
    Sides sd = ordered_sides(t, f, "set-ordered-graceful");
    int s = (int)sd.x.size(), tt = (int)sd.y.size();
    Labelling out;
    for (VertexId x : sd.x) out.vertex[x] = s - 1 - f.vertex.at(x);
    for (VertexId y : sd.y) out.vertex[y] = tt + 2 * s - 1 - f.vertex.at(y);
    fill_difference_edges(t, out);
    return out;
}

Labelling image_labelling_odd(const Graph& t, const Labelling& f) {
    Sides sd = ordered_sides(t, f, "set-ordered-odd-graceful");
    int s = (int)sd.x.size(), q = t.edge_count();
    Labelling out;
    for (VertexId x : sd.x) out.vertex[x] = 2 * s - 2 - f.vertex.at(x);
    for (VertexId y : sd.y) out.vertex[y] = 2 * q + 2 * s - 2 - f.vertex.at(y);
    fill_difference_edges(t, out);
    return out;
}

std::pair<Labelling, Labelling> reciprocal_inverse_pair(const Graph& t1, const Labelling& f1,
                                                        const Graph& t2, const Labelling& f2) {
    if (t1.vertex_count() != t2.vertex_count())
        fail("SizeMismatch", "both trees must have the same vertex count");
    int p = t1.vertex_count();
    auto build = [&](const Graph& t, const Labelling& f) {
        Sides sd = ordered_sides(t, f, "set-ordered-graceful");
        int s = (int)sd.x.size();
        Labelling base = with_difference_edges(t, f);
        Labelling g;
        for (VertexId x : sd.x) g.vertex[x] = f.vertex.at(x) + 1;
        for (VertexId y : sd.y) g.vertex[y] = s + p - f.vertex.at(y);
        for (int i = 0; i < t.edge_count(); ++i) g.edge[i] = base.edge.at(i) + p;
        return g;
    };
    Labelling g1 = build(t1, f1);
    Labelling g2 = build(t2, f2);
    Labelling h2;
    for (auto& [v, val] : g2.vertex) h2.vertex[v] = 2 * p - val;
    for (auto& [e, val] : g2.edge) h2.edge[e] = 2 * p - val;
    return {g1, h2};
}

Labelling six_c_from_set_ordered_graceful(const Graph& t, const Labelling& f) {
    ordered_sides(t, f, "set-ordered-graceful");
    int p = t.vertex_count();
    Labelling base = with_difference_edges(t, f);
    Labelling out;
    for (auto& [v, val] : base.vertex) out.vertex[v] = p + val;
    for (auto& [e, val] : base.edge) out.edge[e] = p - val;
    return out;
}

LabelledGraph six_c_complementary_matching(const Graph& g, const Labelling& f, const Graph& h,
                                           const Labelling& fprime) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        fail("ComplementarityViolation", "the two graphs must share (p,q)");
    int p = g.vertex_count(), q = g.edge_count();
    long long z0 = (p + q + 1) / 2;

    auto as_set = [](std::vector<int> v) { return std::set<int>(v.begin(), v.end()); };
    std::set<int> fv = as_set(f.vertex_values()), fe = as_set(f.edge_values());
    std::set<int> gv = as_set(fprime.vertex_values()), ge = as_set(fprime.edge_values());

    std::set<int> shared;
    std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(),
                          std::inserter(shared, shared.begin()));
    if (shared != std::set<int>{(int)z0}) {
        std::string got;
        for (int x : shared) got += (got.empty() ? "" : ",") + std::to_string(x);
        fail("ComplementarityViolation",
             "vertex value sets must meet exactly in {" + std::to_string(z0) + "}, got {" + got + "}");
    }
    std::set<int> fv_rest = fv;
    fv_rest.erase((int)z0);
    std::set<int> gv_rest = gv;
    gv_rest.erase((int)z0);
    if (fv_rest != ge)
        fail("ComplementarityViolation", "f(V) minus the shared value must equal the partner edge set");
    if (fe != gv_rest)
        fail("ComplementarityViolation", "f(E) must equal the partner vertex set minus the shared value");

    VertexId gz = -1, hz = -1;
    for (auto& [v, val] : f.vertex)
        if (val == z0) gz = v;
    for (auto& [v, val] : fprime.vertex)
        if (val == z0) hz = v;

    LabelledGraph out;
    out.graph = g;
    out.labelling = f;
    std::vector<VertexId> hmap(h.vertex_count(), -1);
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (v == hz) {
            hmap[v] = gz;
        } else {
            hmap[v] = out.graph.add_vertex();
            out.labelling.vertex[hmap[v]] = fprime.vertex.at(v);
        }
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        out.graph.add_edge(hmap[e.u], hmap[e.v]);
        out.labelling.edge[out.graph.edge_count() - 1] = fprime.edge.at(i);
    }
    return out;
}

LabelledGraph twin_odd_graceful(const Graph& g, const Labelling& f, const Graph& h,
                                const Labelling& fprime) {
    int q = g.edge_count();
    auto rep = verify(g, f, Scheme{"odd-graceful", {}});
    if (!rep.pass())
        fail("EdgeSetMismatch", "first labelling is not odd-graceful (" +
                                    rep.violations.front().clause + ")");
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        auto it = fprime.vertex.find(v);
        if (it == fprime.vertex.end()) fail("MissingLabel", "vertex " + std::to_string(v));
        if (it->second < 1 || it->second > 2 * q)
            fail("EdgeSetMismatch", "partner vertex labels must sit in [1,2q]");
    }
    Labelling hd = with_difference_edges(h, fprime);
    std::vector<int> ev = hd.edge_values();
    std::sort(ev.begin(), ev.end());
    std::vector<int> want;
    for (int i = 1; i <= 2 * q - 1; i += 2) want.push_back(i);
    if (ev != want)
        fail("EdgeSetMismatch", "partner edge differences must form the odd numbers [1,2q-1]");

    Labelling fd = with_difference_edges(g, f);
    std::map<int, VertexId> by_value;
    for (auto& [v, val] : fd.vertex) by_value[val] = v;

    LabelledGraph out;
    out.graph = g;
    out.labelling = fd;
    std::vector<VertexId> hmap(h.vertex_count(), -1);
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        int val = hd.vertex.at(v);
        auto hit = by_value.find(val);
        if (hit != by_value.end()) {
            hmap[v] = hit->second;
        } else {
            hmap[v] = out.graph.add_vertex();
            out.labelling.vertex[hmap[v]] = val;
        }
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        out.graph.add_edge(hmap[e.u], hmap[e.v]);
        out.labelling.edge[out.graph.edge_count() - 1] = hd.edge.at(i);
    }
    return out;
}

std::vector<std::pair<Scheme, Labelling>> equivalence_suite(const Graph& t, const Labelling& f,
                                                            long long k, long long d) {
    Sides sd = ordered_sides(t, f, "set-ordered-graceful");
    if (k < 1 || d < 1) fail("MissingParameter", "k and d must be at least 1");
    int p = t.vertex_count(), q = t.edge_count();
    int s = (int)sd.x.size();
    Labelling base = with_difference_edges(t, f);

    std::vector<std::pair<Scheme, Labelling>> out;
    auto vertex_map = [&](auto fx, auto fy) {
        Labelling L;
        for (VertexId x : sd.x) L.vertex[x] = (int)fx((long long)f.vertex.at(x));
        for (VertexId y : sd.y) L.vertex[y] = (int)fy((long long)f.vertex.at(y));
        return L;
    };

    {
        Labelling L = vertex_map([&](long long a) { return a; },
                                 [&](long long b) { return q - (b - s); });
        out.push_back({Scheme{"super-felicitous", {}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return 2 * a; },
                                 [&](long long b) { return 2 * (p - 1 - b) + 1; });
        out.push_back({Scheme{"odd-elegant", {}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return s - a; },
                                 [&](long long b) { return b + 1; });
        for (int i = 0; i < q; ++i) L.edge[i] = p + q + 1 - base.edge.at(i);
        out.push_back({Scheme{"super-edge-magic-total", {{"k", s + 2LL * p + 1}}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return s - a; },
                                 [&](long long b) { return b + 1; });
        for (int i = 0; i < q; ++i) L.edge[i] = p + base.edge.at(i);
        out.push_back({Scheme{"super-edge-antimagic-total", {{"k", s + p + 3LL}, {"d", 2}}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return d * a; },
                                 [&](long long b) { return k + d * (b - 1); });
        out.push_back({Scheme{"kd-graceful", {{"k", k}, {"d", d}}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return d * (s - 1 - a); },
                                 [&](long long b) { return k + d * (b - s); });
        out.push_back({Scheme{"kd-arithmetic", {{"k", k}, {"d", d}}}, L});
    }
    {
        Labelling L = vertex_map([&](long long a) { return a; },
                                 [&](long long b) { return (q - (b - s)) % q; });
        out.push_back({Scheme{"harmonious", {}}, L});
    }
    return out;
}

}  // namespace topsnut
