#include "topsnut/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "topsnut/error.hpp"

namespace topsnut {
namespace {

// BFS max-flow on a dense capacity matrix. Sizes here stay tiny.
int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
    const int n = static_cast<int>(cap.size());
    int flow = 0;
    for (;;) {
        std::vector<int> prev(n, -1);
        prev[s] = s;
        std::deque<int> queue{s};
        while (!queue.empty() && prev[t] < 0) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (cap[v][w] > 0 && prev[w] < 0) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (prev[t] < 0) return flow;
        int push = cap[prev[t]][t];
        for (int v = t; v != s; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
        }
        flow += push;
    }
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// Vertex-disjoint s-t paths via the standard in/out node split.
int vertex_flow(const Graph& g, VertexId s, VertexId t) {
    const int n = g.vertex_count();
    const int inf = n + 1;
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (VertexId v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
    for (const Edge& e : g.edges()) {
        cap[2 * e.u + 1][2 * e.v] = inf;
        cap[2 * e.v + 1][2 * e.u] = inf;
    }
    return max_flow(std::move(cap), 2 * s + 1, 2 * t);
}

// Yields subsets of {0..n-1} of the given size in lexicographic order.
bool next_subset(std::vector<int>& pick, int n) {
    const int k = static_cast<int>(pick.size());
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    return true;
}

std::vector<int> first_subset(int k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    return pick;
}

bool separates(const Graph& g, const std::vector<VertexId>& drop) {
    return g.without_vertices(drop).component_count() >= 2;
}

}  // namespace

int kappa(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.connected()) return 0;
    if (is_complete(g)) return n - 1;
    int best = n;
    for (VertexId s = 0; s < n; ++s)
        for (VertexId t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
    return best;
}

int kappa_prime(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.connected()) return 0;
    int best = g.edge_count();
    for (VertexId t = 1; t < n; ++t) {
        std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
        for (const Edge& e : g.edges()) cap[e.u][e.v] = cap[e.v][e.u] = 1;
        best = std::min(best, max_flow(std::move(cap), 0, t));
    }
    return best;
}

SplitConnectivity v_split_connectivity(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) fail("SizeLimitExceeded", "vertex split search capped at " + std::to_string(cap) + " vertices");
    SplitConnectivity out{std::nullopt, kappa(g)};
    for (int k = 1; k <= n - 2; ++k) {
        auto pick = first_subset(k);
        do {
            std::vector<VertexId> s(pick.begin(), pick.end());
            if (separates(g, s)) {
                out.gamma = k;
                return out;
            }
        } while (next_subset(pick, n));
    }
    return out;
}

std::optional<int> e_split_connectivity(const Graph& g, int cap) {
    const int q = g.edge_count();
    if (q > cap) fail("SizeLimitExceeded", "edge split search capped at " + std::to_string(cap) + " edges");
    for (int k = 1; k <= q; ++k) {
        auto pick = first_subset(k);
        do {
            std::vector<VertexId> ends;
            for (int idx : pick) {
                ends.push_back(g.edge(idx).u);
                ends.push_back(g.edge(idx).v);
            }
            std::sort(ends.begin(), ends.end());
            ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
            if (static_cast<int>(ends.size()) < g.vertex_count() && separates(g, ends)) return k;
        } while (next_subset(pick, q));
    }
    return std::nullopt;
}

namespace {

// Split every vertex of s into two copies; `bits` assigns each incident edge
// end to a copy. Copy ids: original id keeps copy 0, n + pos(s) is copy 1.
Graph apply_v_split(const Graph& g, const std::vector<VertexId>& s, std::uint64_t bits) {
    const int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;
    Graph h(n + static_cast<int>(s.size()));
    int bit = 0;
    auto place = [&](VertexId v) {
        if (pos[v] < 0) return v;
        bool hi = (bits >> bit++) & 1;
        return hi ? n + pos[v] : v;
    };
    for (const Edge& e : g.edges()) h.add_edge(place(e.u), place(e.v));
    return h;
}

bool split_components_ok(const Graph& h, int n_original, const std::vector<int>& pos) {
    if (h.component_count() < 2) return false;
    auto comp = h.component_ids();
    int comps = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<bool> has_plain(comps, false);
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (v < n_original && pos[v] < 0) has_plain[comp[v]] = true;
    return std::all_of(has_plain.begin(), has_plain.end(), [](bool b) { return b; });
}

}  // namespace

bool v_split_set_disconnects(const Graph& g, const std::vector<VertexId>& s) {
    const int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    int bit_count = 0;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        pos[s[i]] = i;
        bit_count += g.degree(s[i]);
    }
    if (bit_count > 22) fail("SizeLimitExceeded", "too many split assignments to enumerate");
    for (std::uint64_t bits = 0; bits < (1ULL << bit_count); ++bits) {
        Graph h = apply_v_split(g, s, bits);
        if (split_components_ok(h, n, pos)) return true;
    }
    return false;
}

std::optional<int> v_split_connectivity_literal(const Graph& g) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        auto pick = first_subset(k);
        do {
            std::vector<VertexId> s(pick.begin(), pick.end());
            if (v_split_set_disconnects(g, s)) return k;
        } while (next_subset(pick, n));
    }
    return std::nullopt;
}

namespace {

struct ESplitState {
    std::vector<Edge> edges;         // stable indices, endpoints rewired as splits happen
    int vertex_count;
    std::vector<bool> clean;         // true while a vertex is no end of a split edge
};

bool e_split_recursive(ESplitState st, const std::vector<int>& targets, std::size_t next) {
    if (next == targets.size()) {
        Graph h(st.vertex_count);
        for (const Edge& e : st.edges) h.add_edge(e.u, e.v);
        if (h.component_count() < 2) return false;
        auto comp = h.component_ids();
        int comps = *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<bool> ok(comps, false);
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (st.clean[v]) ok[comp[v]] = true;
        return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
    }

    const int target = targets[next];
    const VertexId u = st.edges[target].u;
    const VertexId v = st.edges[target].v;
    std::vector<int> at_u, at_v;
    for (int i = 0; i < static_cast<int>(st.edges.size()); ++i) {
        if (i == target) continue;
        if (st.edges[i].touches(u)) at_u.push_back(i);
        if (st.edges[i].touches(v)) at_v.push_back(i);
    }
    const VertexId u2 = st.vertex_count;
    const VertexId v2 = st.vertex_count + 1;
    for (std::uint64_t mu = 0; mu < (1ULL << at_u.size()); ++mu) {
        for (std::uint64_t mv = 0; mv < (1ULL << at_v.size()); ++mv) {
            ESplitState branch = st;
            branch.vertex_count += 2;
            branch.clean[u] = branch.clean[v] = false;
            branch.clean.push_back(false);
            branch.clean.push_back(false);
            for (std::size_t i = 0; i < at_u.size(); ++i)
                if ((mu >> i) & 1) {
                    Edge& e = branch.edges[at_u[i]];
                    (e.u == u ? e.u : e.v) = u2;
                }
            for (std::size_t i = 0; i < at_v.size(); ++i)
                if ((mv >> i) & 1) {
                    Edge& e = branch.edges[at_v[i]];
                    (e.u == v ? e.u : e.v) = v2;
                }
            branch.edges.push_back({u2, v2});
            if (e_split_recursive(std::move(branch), targets, next + 1)) return true;
        }
    }
    return false;
}

}  // namespace

bool e_split_set_disconnects(const Graph& g, const std::vector<int>& edge_idx) {
    long work = 1;
    for (int idx : edge_idx) {
        const Edge& e = g.edge(idx);
        work *= 1L << (g.degree(e.u) + g.degree(e.v) - 2);
        if (work > (1L << 24)) fail("SizeLimitExceeded", "too many split assignments to enumerate");
    }
    ESplitState st{g.edges(), g.vertex_count(), std::vector<bool>(g.vertex_count(), true)};
    return e_split_recursive(std::move(st), edge_idx, 0);
}

std::optional<int> e_split_connectivity_literal(const Graph& g) {
    const int q = g.edge_count();
    for (int k = 1; k <= q; ++k) {
        auto pick = first_subset(k);
        do {
            if (e_split_set_disconnects(g, pick)) return k;
        } while (next_subset(pick, q));
    }
    return std::nullopt;
}

}  // namespace topsnut
