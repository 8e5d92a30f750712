#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "topsnut/error.hpp"
#include "topsnut/labelling.hpp"

namespace topsnut {

namespace {

std::string ename(const Graph& g, int i) {
    const Edge& e = g.edge(i);
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

void need_all_vertices(const Graph& g, const Labelling& L) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!L.vertex.count(v)) fail("MissingLabel", "vertex " + std::to_string(v));
}

void need_all_edges(const Graph& g, const Labelling& L) {
    for (int i = 0; i < g.edge_count(); ++i)
        if (!L.edge.count(i)) fail("MissingLabel", "edge " + ename(g, i));
}

bool distinct_values(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool within(const std::vector<int>& v, int lo, int hi) {
    return std::all_of(v.begin(), v.end(), [&](int x) { return lo <= x && x <= hi; });
}

// multiset equality with {a, a+1, ..., b}
bool equals_interval(std::vector<int> v, int a, int b) {
    if ((int)v.size() != b - a + 1) return false;
    std::sort(v.begin(), v.end());
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] != a + i) return false;
    return true;
}

// multiset equality with {1, 3, ..., hi}
bool equals_odd_interval(std::vector<int> v, int hi) {
    if (hi < 1 || hi % 2 == 0 || (int)v.size() != (hi + 1) / 2) return false;
    std::sort(v.begin(), v.end());
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] != 2 * i + 1) return false;
    return true;
}

bool consecutive_window(std::vector<int> v) {
    if (v.empty()) return true;
    std::sort(v.begin(), v.end());
    for (int i = 1; i < (int)v.size(); ++i)
        if (v[i] != v[0] + i) return false;
    return true;
}

long long floormod(long long x, long long m) { return ((x % m) + m) % m; }

enum class EdgeRule { difference, mod_sum, plain_sum, even_sum, mod_star };

// Derive edge labels from vertex labels when the labelling carries none;
// otherwise check the stored labels against the rule.
void apply_edge_rule(const Graph& g, Labelling& L, VerificationReport& rep, EdgeRule r,
                     long long M = 0, long long k = 0) {
    bool derive = L.edge.empty();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        long long fu = L.vertex.at(e.u), fv = L.vertex.at(e.v);
        long long want = 0;
        switch (r) {
            case EdgeRule::difference: want = std::abs(fu - fv); break;
            case EdgeRule::mod_sum: want = floormod(fu + fv, M); break;
            case EdgeRule::plain_sum: want = fu + fv; break;
            case EdgeRule::even_sum: want = (fu + fv) % 2 == 0 ? fu + fv : fu + fv + 1; break;
            case EdgeRule::mod_star: want = k + floormod(fu + fv - k, M); break;
        }
        if (derive) {
            L.edge[i] = (int)want;
        } else {
            auto it = L.edge.find(i);
            if (it == L.edge.end()) fail("MissingLabel", "edge " + ename(g, i));
            if (it->second != (int)want)
                rep.fail("edge-rule", ename(g, i) + " has " + std::to_string(it->second) +
                                          ", rule gives " + std::to_string(want));
        }
    }
}

// 0: max f(X) < min f(Y); 1: max f(Y) < min f(X); -1: neither; -2: not bipartite
int set_ordered_direction(const Graph& g, const Labelling& L) {
    auto parts = g.bipartition();
    if (!parts) return -2;
    auto extremes = [&](const std::vector<VertexId>& side) {
        int lo = 0, hi = 0;
        bool first = true;
        for (VertexId v : side) {
            int x = L.vertex.at(v);
            if (first) { lo = hi = x; first = false; }
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return std::pair<int, int>{lo, hi};
    };
    auto [xlo, xhi] = extremes(parts->first);
    auto [ylo, yhi] = extremes(parts->second);
    if (xhi < ylo) return 0;
    if (yhi < xlo) return 1;
    return -1;
}

// --- matching utilities ----------------------------------------------------

bool kuhn_try(int i, const std::vector<std::vector<int>>& adj, std::vector<int>& match_r,
              std::vector<char>& vis) {
    for (int w : adj[i]) {
        if (vis[w]) continue;
        vis[w] = 1;
        if (match_r[w] < 0 || kuhn_try(match_r[w], adj, match_r, vis)) {
            match_r[w] = i;
            return true;
        }
    }
    return false;
}

int max_bipartite(const std::vector<std::vector<int>>& adj, int right_n,
                  std::vector<int>& match_r) {
    match_r.assign(right_n, -1);
    int total = 0;
    for (int i = 0; i < (int)adj.size(); ++i) {
        std::vector<char> vis(right_n, 0);
        if (kuhn_try(i, adj, match_r, vis)) ++total;
    }
    return total;
}

// Cover {0..n-1} by mutually compatible pairs, allowing a self-matched
// element only where ok[i][i] holds. Pairs are preferred over self matches.
bool pairing_search(int n, const std::vector<std::vector<char>>& ok, std::vector<int>& partner) {
    int i = -1;
    for (int t = 0; t < n; ++t)
        if (partner[t] < 0) { i = t; break; }
    if (i < 0) return true;
    for (int j = i + 1; j < n; ++j) {
        if (partner[j] >= 0 || !ok[i][j]) continue;
        partner[i] = j;
        partner[j] = i;
        if (pairing_search(n, ok, partner)) return true;
        partner[i] = partner[j] = -1;
    }
    if (ok[i][i]) {
        partner[i] = i;
        if (pairing_search(n, ok, partner)) return true;
        partner[i] = -1;
    }
    return false;
}

bool perfect_vertex_matching(const Graph& g, const std::vector<char>& edge_ok,
                             std::vector<int>& mate) {
    int n = g.vertex_count();
    mate.assign(n, -1);
    std::function<bool()> go = [&]() {
        int v = -1;
        for (int t = 0; t < n; ++t)
            if (mate[t] < 0) { v = t; break; }
        if (v < 0) return true;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (!edge_ok[i] || !g.edge(i).touches(v)) continue;
            int w = g.edge(i).other(v);
            if (w == v || mate[w] >= 0) continue;
            mate[v] = w;
            mate[w] = v;
            if (go()) return true;
            mate[v] = mate[w] = -1;
        }
        return false;
    };
    return go();
}

// --- scheme checks ---------------------------------------------------------

struct GracefulOpts {
    bool odd = false;
    bool set_ordered = false;
    bool strongly = false;
    bool perfect = false;
};

void check_graceful_family(const Graph& g, Labelling wk, VerificationReport& rep,
                           GracefulOpts o) {
    int q = g.edge_count();
    need_all_vertices(g, wk);
    apply_edge_rule(g, wk, rep, EdgeRule::difference);
    auto vv = wk.vertex_values();
    auto ev = wk.edge_values();
    if (!distinct_values(vv)) rep.fail("vertex-injective", "duplicate vertex label");
    int hi = o.odd ? 2 * q - 1 : q;
    if (!within(vv, 0, hi) || *std::min_element(vv.begin(), vv.end()) != 0)
        rep.fail("vertex-range", "f(V) must sit in [0," + std::to_string(hi) + "] with min 0");
    bool edges_ok = o.odd ? equals_odd_interval(ev, 2 * q - 1) : equals_interval(ev, 1, q);
    if (!edges_ok)
        rep.fail("edge-set", o.odd ? "f(E) must be the odd numbers [1,2q-1]" : "f(E) must be [1,q]");
    if (o.set_ordered) {
        int dir = set_ordered_direction(g, wk);
        if (dir < 0)
            rep.fail("set-ordered", dir == -2 ? "graph is not bipartite" : "neither side dominates");
        else
            rep.note("so_direction", dir);
    }
    if (o.strongly) {
        int target = o.odd ? 2 * q - 1 : q;
        std::vector<char> edge_ok(q, 0);
        for (int i = 0; i < q; ++i) {
            const Edge& e = g.edge(i);
            edge_ok[i] = wk.vertex.at(e.u) + wk.vertex.at(e.v) == target;
        }
        std::vector<int> mate;
        if (g.vertex_count() % 2 != 0 || !perfect_vertex_matching(g, edge_ok, mate))
            rep.fail("matching", "no perfect matching with endpoint sums " + std::to_string(target));
    }
    if (o.perfect) {
        std::vector<int> diffs;
        for (size_t a = 0; a < vv.size(); ++a)
            for (size_t b = a + 1; b < vv.size(); ++b) diffs.push_back(std::abs(vv[a] - vv[b]));
        std::sort(diffs.begin(), diffs.end());
        diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
        if (!equals_interval(diffs, 1, g.vertex_count()))
            rep.fail("vertex-differences",
                     "pairwise vertex label differences must form [1," +
                         std::to_string(g.vertex_count()) + "]");
    }
}

void check_edge_odd_graceful_total(const Graph& g, Labelling wk, VerificationReport& rep) {
    int q = g.edge_count();
    need_all_vertices(g, wk);
    need_all_edges(g, wk);
    auto vv = wk.vertex_values();
    auto ev = wk.edge_values();
    if (!within(vv, 0, q - 1)) rep.fail("vertex-range", "f(V) must sit in [0,q-1]");
    if (!equals_odd_interval(ev, 2 * q - 1))
        rep.fail("edge-set", "f(E) must be the odd numbers [1,2q-1]");
    std::vector<int> sums;
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        sums.push_back(wk.vertex.at(e.u) + wk.edge.at(i) + wk.vertex.at(e.v));
    }
    if (!distinct_values(sums) || !consecutive_window(sums)) {
        rep.fail("sum-window", "edge sums f(u)+f(uv)+f(v) must fill q consecutive integers");
    } else {
        auto [lo, hi2] = std::minmax_element(sums.begin(), sums.end());
        rep.note("window_lo", *lo);
        rep.note("window_hi", *hi2);
    }
}

struct HarmoniousOpts {
    int vertex_hi_offset = -1;  // f(V) within [0, q + offset]
    bool tree_repeat = false;   // one value may sit on two vertices of a tree
    bool set_ordered = false;
    bool straddle = false;      // exists k with min < k+1 <= max per edge
    long long modulus = 0;      // 0: plain q
    int edge_lo = 0;            // edge set [edge_lo, edge_lo + q - 1]
    bool even_edges = false;    // edge set [2, 2q] even, rule even_sum
    bool even_range = false;    // edge set [0, 2q-2] even
    bool odd_edges = false;     // edge set [1, 2q-1] odd
};

void check_harmonious_family(const Graph& g, Labelling wk, VerificationReport& rep,
                             HarmoniousOpts o) {
    int q = g.edge_count();
    need_all_vertices(g, wk);
    long long M = o.modulus ? o.modulus : q;
    if (o.even_edges)
        apply_edge_rule(g, wk, rep, EdgeRule::even_sum);
    else
        apply_edge_rule(g, wk, rep, EdgeRule::mod_sum, M);
    auto vv = wk.vertex_values();
    auto ev = wk.edge_values();
    int vhi = q + o.vertex_hi_offset;
    if (!within(vv, 0, vhi))
        rep.fail("vertex-range", "f(V) must sit in [0," + std::to_string(vhi) + "]");
    if (o.tree_repeat && g.is_tree()) {
        std::vector<int> sorted = vv;
        std::sort(sorted.begin(), sorted.end());
        int repeats = 0;
        for (size_t i = 0; i + 1 < sorted.size(); ++i) {
            if (sorted[i] == sorted[i + 1]) ++repeats;
            if (i + 2 < sorted.size() && sorted[i] == sorted[i + 2]) repeats = 3;
        }
        if (repeats > 1) rep.fail("vertex-injective", "more than one vertex value repeated");
    } else if (!distinct_values(vv)) {
        rep.fail("vertex-injective", "duplicate vertex label");
    }
    bool edges_ok;
    if (o.even_edges)
        edges_ok = (int)ev.size() == q && distinct_values(ev) &&
                   std::all_of(ev.begin(), ev.end(), [&](int x) { return x % 2 == 0 && x >= 2 && x <= 2 * q; });
    else if (o.even_range)
        edges_ok = (int)ev.size() == q && distinct_values(ev) &&
                   std::all_of(ev.begin(), ev.end(), [&](int x) { return x % 2 == 0 && x >= 0 && x <= 2 * q - 2; });
    else if (o.odd_edges)
        edges_ok = equals_odd_interval(ev, 2 * q - 1);
    else
        edges_ok = equals_interval(ev, o.edge_lo, o.edge_lo + q - 1);
    if (!edges_ok) rep.fail("edge-set", "edge labels do not form the required set");
    if (o.set_ordered) {
        int dir = set_ordered_direction(g, wk);
        if (dir < 0)
            rep.fail("set-ordered", dir == -2 ? "graph is not bipartite" : "neither side dominates");
        else
            rep.note("so_direction", dir);
    }
    if (o.straddle) {
        int lo_need = 0, hi_need = 0;
        bool first = true;
        for (int i = 0; i < q; ++i) {
            const Edge& e = g.edge(i);
            int a = std::min(wk.vertex.at(e.u), wk.vertex.at(e.v));
            int b = std::max(wk.vertex.at(e.u), wk.vertex.at(e.v));
            if (first) { lo_need = a; hi_need = b; first = false; }
            lo_need = std::max(lo_need, a);
            hi_need = std::min(hi_need, b);
        }
        if (lo_need >= hi_need)
            rep.fail("straddle", "no k has min{f(u),f(v)} <= k < max{f(u),f(v)} on every edge");
        else
            rep.note("k", lo_need);
    }
}

void check_c_harmonious(const Graph& g, Labelling wk, VerificationReport& rep, long long c) {
    int q = g.edge_count();
    need_all_vertices(g, wk);
    apply_edge_rule(g, wk, rep, EdgeRule::plain_sum);
    auto vv = wk.vertex_values();
    if (!within(vv, 0, q - 1)) rep.fail("vertex-range", "f(V) must sit in [0,q-1]");
    if (!distinct_values(vv)) rep.fail("vertex-injective", "duplicate vertex label");
    if (!equals_interval(wk.edge_values(), (int)c, (int)c + q - 1))
        rep.fail("edge-set", "edge sums must form [c,c+q-1]");
}

void check_kd_harmonious(const Graph& g, Labelling wk, VerificationReport& rep, long long k,
                         long long d) {
    int q = g.edge_count();
    need_all_vertices(g, wk);
    apply_edge_rule(g, wk, rep, EdgeRule::mod_star, (long long)q * d, k);
    auto vv = wk.vertex_values();
    if (!within(vv, 0, (int)(k + (q - 1) * d)))
        rep.fail("vertex-range", "h(V) must sit in [0,k+(q-1)d]");
    if (!distinct_values(vv)) rep.fail("vertex-injective", "duplicate vertex label");
    std::vector<int> want;
    for (int i = 0; i < q; ++i) want.push_back((int)(k + i * d));
    auto ev = wk.edge_values();
    std::sort(ev.begin(), ev.end());
    if (ev != want) rep.fail("edge-set", "edge labels must form {k,k+d,...,k+(q-1)d}");
}

void check_kd_vertex_scheme(const Graph& g, const Labelling& L, VerificationReport& rep,
                            long long k, long long d, bool sums) {
    int q = g.edge_count();
    need_all_vertices(g, L);
    auto vv = L.vertex_values();
    if (!distinct_values(vv)) rep.fail("vertex-injective", "duplicate vertex label");
    if (!within(vv, 0, (int)(k + (q - 1) * d)))
        rep.fail("vertex-range", "f(V) must sit in [0,k+(q-1)d]");
    std::vector<int> got;
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        int a = L.vertex.at(e.u), b = L.vertex.at(e.v);
        got.push_back(sums ? a + b : std::abs(a - b));
    }
    if (!L.edge.empty()) {
        for (int i = 0; i < q; ++i) {
            auto it = L.edge.find(i);
            if (it != L.edge.end() && it->second != got[i])
                rep.fail("edge-rule", ename(g, i) + " stored label disagrees with the rule");
        }
    }
    std::vector<int> want;
    for (int i = 0; i < q; ++i) want.push_back((int)(k + i * d));
    std::sort(got.begin(), got.end());
    if (got != want)
        rep.fail("edge-set", std::string(sums ? "endpoint sums" : "endpoint differences") +
                                 " must form {k,k+d,...,k+(q-1)d}");
}

void check_magic_total(const Graph& g, const Labelling& L, VerificationReport& rep, bool super,
                       bool pan) {
    int p = g.vertex_count(), q = g.edge_count();
    need_all_vertices(g, L);
    need_all_edges(g, L);
    if (!pan) {
        std::vector<int> all = L.vertex_values();
        for (int x : L.edge_values()) all.push_back(x);
        if (!equals_interval(all, 1, p + q))
            rep.fail("total-bijection", "labels must be a bijection onto [1,p+q]");
        if (super && !equals_interval(L.vertex_values(), 1, p))
            rep.fail("super", "vertex labels must be exactly [1,p]");
    }
    bool first = true;
    long long k = 0;
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        long long s = (long long)L.vertex.at(e.u) + L.edge.at(i) + L.vertex.at(e.v);
        if (first) { k = s; first = false; }
        if (s != k) {
            rep.fail("magic-constant", ename(g, i) + " sums to " + std::to_string(s) +
                                           ", expected " + std::to_string(k));
            return;
        }
    }
    rep.note("k", k);
}

void check_antimagic_total(const Graph& g, const Labelling& L, VerificationReport& rep,
                           const Scheme& sc, bool super) {
    int p = g.vertex_count(), q = g.edge_count();
    need_all_vertices(g, L);
    need_all_edges(g, L);
    std::vector<int> all = L.vertex_values();
    for (int x : L.edge_values()) all.push_back(x);
    if (!equals_interval(all, 1, p + q))
        rep.fail("total-bijection", "labels must be a bijection onto [1,p+q]");
    if (super && !equals_interval(L.vertex_values(), 1, p))
        rep.fail("super", "vertex labels must be exactly [1,p]");
    std::vector<long long> w;
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        w.push_back((long long)L.vertex.at(e.u) + L.edge.at(i) + L.vertex.at(e.v));
    }
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
        rep.fail("weights", "edge weights repeat");
        return;
    }
    long long k = sc.param("k", w.front());
    long long d = sc.param("d", q >= 2 ? w[1] - w[0] : 1);
    for (int i = 0; i < q; ++i) {
        if (w[i] != k + i * d) {
            rep.fail("weights", "edge weights must form {k,k+d,...,k+(q-1)d} with k=" +
                                    std::to_string(k) + " d=" + std::to_string(d));
            return;
        }
    }
    rep.note("k", k);
    rep.note("d", d);
}

// ---- the five edge interpretations of one vertex bijection ----------------

void check_multiple_meaning(const Graph& g, const Labelling& L, VerificationReport& rep) {
    int p = g.vertex_count(), q = g.edge_count();
    need_all_vertices(g, L);
    if (!equals_interval(L.vertex_values(), 0, p - 1))
        rep.fail("vertex-bijection", "f(V) must be a bijection onto [0,p-1]");
    std::vector<long long> sums;
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        sums.push_back((long long)L.vertex.at(e.u) + L.vertex.at(e.v));
    }

    // (1)/(2): both ask the endpoint sums to fill q consecutive values
    std::vector<int> s_int(sums.begin(), sums.end());
    bool window = distinct_values(s_int) && consecutive_window(s_int);
    long long max_sum = *std::max_element(sums.begin(), sums.end());
    long long min_sum = *std::min_element(sums.begin(), sums.end());
    if (!window) {
        rep.fail("m-1", "endpoint sums must fill q consecutive integers");
        rep.fail("m-2", "endpoint sums must fill q consecutive integers");
    } else {
        rep.note("k1", max_sum + 1);
        rep.note("k2", max_sum + p);
    }

    // (3): sums mod q pairwise distinct
    std::vector<int> mod;
    for (long long s : sums) mod.push_back((int)floormod(s, q));
    if (!distinct_values(mod))
        rep.fail("m-3", "endpoint sums collide mod q");
    else
        rep.note("k3", q);

    // (4): smallest k with a system |f(u)+f(v)-f(uv)| = k, edge labels [1,q]
    bool found4 = false;
    for (long long k = 0; k <= max_sum + q && !found4; ++k) {
        std::vector<std::vector<int>> adj(q);
        for (int i = 0; i < q; ++i) {
            for (long long l : {sums[i] - k, sums[i] + k}) {
                if (l >= 1 && l <= q) adj[i].push_back((int)l - 1);
                if (k == 0) break;
            }
        }
        std::vector<int> mr;
        if (max_bipartite(adj, q, mr) == q) {
            rep.note("k4", k);
            found4 = true;
        }
    }
    if (!found4) rep.fail("m-4", "no constant difference system onto [1,q]");

    // (5): odd edge labels [1,2q-1] with sums filling a q-window
    if (q > 20) fail("SizeLimitExceeded", "odd interpretation search capped at 20 edges");
    std::vector<int> order(q);
    std::iota(order.begin(), order.end(), 0);
    bool found5 = false;
    for (long long a = min_sum + 1 - (q - 1); a <= min_sum + 2 * q - 1 && !found5; ++a) {
        unsigned pos_used = 0, lab_used = 0;
        std::function<bool(int)> go = [&](int idx) {
            if (idx == q) return true;
            long long s = sums[order[idx]];
            for (int j = 0; j < q; ++j) {
                if (pos_used & (1u << j)) continue;
                long long l = a + j - s;
                if (l < 1 || l > 2 * q - 1 || l % 2 == 0) continue;
                unsigned lbit = 1u << ((l - 1) / 2);
                if (lab_used & lbit) continue;
                pos_used |= 1u << j;
                lab_used |= lbit;
                if (go(idx + 1)) return true;
                pos_used &= ~(1u << j);
                lab_used &= ~lbit;
            }
            return false;
        };
        if (go(0)) {
            rep.note("k5_lo", a);
            rep.note("k5_hi", a + q - 1);
            found5 = true;
        }
    }
    if (!found5) rep.fail("m-5", "no odd-label system with a consecutive sum window");
}

// ---- the six-clause total labelling and its odd variant -------------------

void check_six_c(const Graph& g, const Labelling& L, VerificationReport& rep, bool odd) {
    int p = g.vertex_count(), q = g.edge_count();
    need_all_vertices(g, L);
    need_all_edges(g, L);
    long long wrap = p + q + 1;

    if (odd) {
        std::vector<int> all = L.vertex_values();
        for (int x : L.edge_values()) all.push_back(x);
        if (!within(all, 1, 4 * q - 1))
            rep.fail("range", "all labels must sit in [1,4q-1]");
    } else {
        std::vector<int> all = L.vertex_values();
        for (int x : L.edge_values()) all.push_back(x);
        if (!equals_interval(all, 1, p + q))
            rep.fail("total-bijection", "labels must be a bijection onto [1,p+q]");
    }

    std::vector<long long> diff(q), el(q);
    for (int i = 0; i < q; ++i) {
        const Edge& e = g.edge(i);
        diff[i] = std::abs((long long)L.vertex.at(e.u) - L.vertex.at(e.v));
        el[i] = L.edge.at(i);
    }

    // (i) e-magic
    bool magic = true;
    long long k = q ? el[0] + diff[0] : 0;
    for (int i = 0; i < q; ++i) {
        if (el[i] + diff[i] != k) magic = false;
        if (odd && el[i] % 2 == 0) rep.fail("i-odd", ename(g, i) + " edge label is even");
    }
    if (!magic)
        rep.fail("i-magic", "f(uv)+|f(u)-f(v)| is not constant");
    else
        rep.note("k", k);

    // (ii) every edge pairs with another via the difference relation
    {
        std::vector<std::vector<char>> ok(q, std::vector<char>(q, 0));
        auto one_way = [&](int a, int b) {
            if (odd) return el[a] == 2 * q + diff[b];
            return el[a] == diff[b] || el[a] == wrap - diff[b];
        };
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) ok[i][j] = one_way(i, j) && one_way(j, i) && (odd ? i != j : true);
        std::vector<int> partner(q, -1);
        if (!pairing_search(q, ok, partner))
            rep.fail("ii-difference", "no full pairing under the edge-difference relation");
    }

    // (iii) balanced pairing on s(uv) = |f(u)-f(v)| - f(uv)
    {
        std::vector<long long> s(q);
        for (int i = 0; i < q; ++i) s[i] = diff[i] - el[i];
        std::vector<long long> cands;
        for (int i = 0; i < q; ++i)
            for (int j = i; j < q; ++j) {
                cands.push_back(s[i] + s[j]);
                cands.push_back(wrap + s[i] + s[j]);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        bool done = false;
        for (long long kp : cands) {
            std::vector<std::vector<char>> ok(q, std::vector<char>(q, 0));
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    ok[i][j] = (s[i] + s[j] == kp) || (wrap + s[i] + s[j] == kp);
            std::vector<int> partner(q, -1);
            if (pairing_search(q, ok, partner)) {
                rep.note("kprime", kp);
                int wrapped = 0;
                for (int i = 0; i < q; ++i)
                    if (partner[i] >= i && s[i] + s[partner[i]] != kp) ++wrapped;
                rep.note("kprime_wrapped_pairs", wrapped);
                done = true;
                break;
            }
        }
        if (!done) rep.fail("iii-balanced", "no constant balances the edge pairs");
    }

    // (iv) EV-ordered
    {
        auto vv = L.vertex_values();
        auto ev = L.edge_values();
        int vmin = *std::min_element(vv.begin(), vv.end());
        int vmax = *std::max_element(vv.begin(), vv.end());
        int emin = *std::min_element(ev.begin(), ev.end());
        int emax = *std::max_element(ev.begin(), ev.end());
        if (odd) {
            if (vmax >= emin) rep.fail("iv-ordered", "max f(V) must stay below min f(E)");
            std::vector<int> diffs;
            for (size_t a = 0; a < vv.size(); ++a)
                for (size_t b = a + 1; b < vv.size(); ++b) diffs.push_back(std::abs(vv[a] - vv[b]));
            std::sort(diffs.begin(), diffs.end());
            diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
            if (!equals_interval(diffs, 1, 2 * q - 1))
                rep.fail("iv-differences", "vertex label differences must form [1,2q-1]");
        } else {
            auto subset = [](std::vector<int> a, std::vector<int> b) {
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                return std::includes(b.begin(), b.end(), a.begin(), a.end());
            };
            int ev_case = 0;
            if (vmin > emax) ev_case = 1;
            else if (vmax < emin) ev_case = 2;
            else if (subset(vv, ev)) ev_case = 3;
            else if (subset(ev, vv)) ev_case = 4;
            else if (std::all_of(vv.begin(), vv.end(), [](int x) { return x % 2 != 0; }) &&
                     std::all_of(ev.begin(), ev.end(), [](int x) { return x % 2 == 0; }))
                ev_case = 5;
            if (!ev_case)
                rep.fail("iv-ordered", "no ordering relation between f(V) and f(E)");
            else
                rep.note("ev_case", ev_case);
        }
    }

    // (v) edges match vertices at one constant (plain) or two (odd variant)
    if (odd) {
        std::vector<long long> cands;
        for (int i = 0; i < q; ++i)
            for (VertexId w = 0; w < p; ++w) cands.push_back(el[i] + L.vertex.at(w));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        bool done = false;
        for (size_t a = 0; a < cands.size() && !done; ++a) {
            for (size_t b = a; b < cands.size() && !done; ++b) {
                std::vector<std::vector<int>> adj(q);
                for (int i = 0; i < q; ++i)
                    for (VertexId w = 0; w < p; ++w) {
                        long long s = el[i] + L.vertex.at(w);
                        if (s == cands[a] || s == cands[b]) adj[i].push_back(w);
                    }
                std::vector<int> mr;
                if (max_bipartite(adj, p, mr) == q) {
                    rep.note("kv1", cands[a]);
                    rep.note("kv2", cands[b]);
                    done = true;
                }
            }
        }
        if (!done) rep.fail("v-matching", "no two constants tie every edge to its own vertex");
    } else {
        long long z0 = (p + q + 1) / 2;
        VertexId z0v = -1;
        for (VertexId v = 0; v < p; ++v)
            if (L.vertex.at(v) == z0) z0v = v;
        if (q != p - 1 || z0v < 0) {
            rep.fail("v-matching", "needs q = p-1 and a vertex labelled floor((p+q+1)/2)");
        } else {
            std::vector<long long> cands;
            for (int i = 0; i < q; ++i)
                for (VertexId w = 0; w < p; ++w)
                    if (w != z0v) cands.push_back(el[i] + L.vertex.at(w));
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            bool done = false;
            for (long long kpp : cands) {
                std::vector<std::vector<int>> adj(q);
                for (int i = 0; i < q; ++i)
                    for (VertexId w = 0; w < p; ++w)
                        if (w != z0v && el[i] + L.vertex.at(w) == kpp) adj[i].push_back(w);
                std::vector<int> mr;
                if (max_bipartite(adj, p, mr) == q) {
                    rep.note("k2", kpp);
                    rep.note("singularity", z0);
                    done = true;
                    break;
                }
            }
            if (!done) rep.fail("v-matching", "no constant ties every edge to its own vertex");
        }
    }

    // (vi) set-ordered
    {
        int dir = set_ordered_direction(g, L);
        if (dir < 0)
            rep.fail("vi-set-ordered",
                     dir == -2 ? "graph is not bipartite" : "neither side dominates");
        else
            rep.note("so_direction", dir);
    }
}

}  // namespace

const std::vector<std::string>& known_schemes() {
    static const std::vector<std::string> names = {
        "graceful", "odd-graceful", "set-ordered-graceful", "set-ordered-odd-graceful",
        "strongly-graceful", "strongly-odd-graceful", "strongly-set-ordered-graceful",
        "strongly-set-ordered-odd-graceful", "perfect-odd-graceful", "edge-odd-graceful-total",
        "felicitous", "super-felicitous", "odd-elegant", "set-ordered-odd-elegant", "harmonious",
        "set-ordered-harmonious", "strongly-harmonious", "properly-even-harmonious",
        "even-sequential-harmonious", "c-harmonious", "edge-magic-total", "super-edge-magic-total",
        "pan-edge-magic-total", "edge-antimagic-total", "super-edge-antimagic-total", "kd-graceful",
        "kd-arithmetic", "kd-harmonious", "multiple-meaning", "6c", "odd-6c"};
    return names;
}

VerificationReport verify(const Graph& g, const Labelling& L, const Scheme& scheme) {
    VerificationReport rep;
    const std::string& n = scheme.name;
    auto need = [&](const char* key) {
        if (!scheme.has(key)) fail("MissingParameter", n + " needs param " + key);
        return scheme.params.at(key);
    };
    if (n == "graceful") check_graceful_family(g, L, rep, {});
    else if (n == "odd-graceful") check_graceful_family(g, L, rep, {true, false, false, false});
    else if (n == "set-ordered-graceful") check_graceful_family(g, L, rep, {false, true, false, false});
    else if (n == "set-ordered-odd-graceful") check_graceful_family(g, L, rep, {true, true, false, false});
    else if (n == "strongly-graceful") check_graceful_family(g, L, rep, {false, false, true, false});
    else if (n == "strongly-odd-graceful") check_graceful_family(g, L, rep, {true, false, true, false});
    else if (n == "strongly-set-ordered-graceful") check_graceful_family(g, L, rep, {false, true, true, false});
    else if (n == "strongly-set-ordered-odd-graceful") check_graceful_family(g, L, rep, {true, true, true, false});
    else if (n == "perfect-odd-graceful") check_graceful_family(g, L, rep, {true, false, false, true});
    else if (n == "edge-odd-graceful-total") check_edge_odd_graceful_total(g, L, rep);
    else if (n == "felicitous") {
        HarmoniousOpts o;
        o.vertex_hi_offset = 0;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "super-felicitous") {
        HarmoniousOpts o;
        o.vertex_hi_offset = 0;
        check_harmonious_family(g, L, rep, o);
        if (!equals_interval(L.vertex_values(), 0, g.vertex_count() - 1))
            rep.fail("super", "vertex labels must be exactly [0,p-1]");
    } else if (n == "odd-elegant" || n == "set-ordered-odd-elegant") {
        HarmoniousOpts o;
        o.vertex_hi_offset = g.edge_count() - 1;  // [0, 2q-1]
        o.modulus = 2 * g.edge_count();
        o.odd_edges = true;
        o.set_ordered = n != "odd-elegant";
        check_harmonious_family(g, L, rep, o);
    } else if (n == "harmonious") {
        HarmoniousOpts o;
        o.vertex_hi_offset = -1;
        o.tree_repeat = true;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "set-ordered-harmonious") {
        HarmoniousOpts o;
        o.vertex_hi_offset = 0;
        o.set_ordered = true;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "strongly-harmonious") {
        HarmoniousOpts o;
        o.vertex_hi_offset = 0;
        o.straddle = true;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "properly-even-harmonious") {
        HarmoniousOpts o;
        o.vertex_hi_offset = g.edge_count();  // [0, 2q]
        o.modulus = 2 * g.edge_count();
        o.even_range = true;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "even-sequential-harmonious") {
        HarmoniousOpts o;
        o.vertex_hi_offset = g.edge_count();
        o.even_edges = true;
        check_harmonious_family(g, L, rep, o);
    } else if (n == "c-harmonious") {
        check_c_harmonious(g, L, rep, need("c"));
    } else if (n == "edge-magic-total") {
        check_magic_total(g, L, rep, false, false);
    } else if (n == "super-edge-magic-total") {
        check_magic_total(g, L, rep, true, false);
    } else if (n == "pan-edge-magic-total") {
        check_magic_total(g, L, rep, false, true);
    } else if (n == "edge-antimagic-total") {
        check_antimagic_total(g, L, rep, scheme, false);
    } else if (n == "super-edge-antimagic-total") {
        check_antimagic_total(g, L, rep, scheme, true);
    } else if (n == "kd-graceful") {
        check_kd_vertex_scheme(g, L, rep, need("k"), need("d"), false);
    } else if (n == "kd-arithmetic") {
        check_kd_vertex_scheme(g, L, rep, need("k"), need("d"), true);
    } else if (n == "kd-harmonious") {
        check_kd_harmonious(g, L, rep, need("k"), need("d"));
    } else if (n == "multiple-meaning") {
        check_multiple_meaning(g, L, rep);
    } else if (n == "6c") {
        check_six_c(g, L, rep, false);
    } else if (n == "odd-6c") {
        check_six_c(g, L, rep, true);
    } else {
        fail("UnknownScheme", n.empty() ? "(none)" : n);
    }
    return rep;
}

}  // namespace topsnut
