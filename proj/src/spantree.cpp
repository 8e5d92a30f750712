#include "topsnut/spantree.hpp"

#include <algorithm>
#include <deque>

namespace topsnut {

namespace {

VertexId max_degree_vertex(const Graph& g) {
    VertexId best = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

}  // namespace

bool is_spanning_tree(const Graph& g, const Graph& t) {
    if (t.vertex_count() != g.vertex_count() || !t.is_tree()) return false;
    for (const Edge& e : t.edges())
        if (!g.has_edge(e.u, e.v)) return false;
    return true;
}

bool is_connected_dominating_set(const Graph& g, const std::vector<VertexId>& s) {
    if (s.empty()) return g.vertex_count() <= 1;
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : s) in[v] = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (VertexId w : g.neighbors(v)) dominated |= in[w];
        if (!dominated) return false;
    }
    // connectivity of the induced subgraph
    Graph ind(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) ind.add_edge(static_cast<int>(i), static_cast<int>(j));
    return ind.connected();
}

SpanningTree spanning_tree_max_leaf(const Graph& g) {
    if (!g.connected()) fail("Disconnected", "need a connected graph");
    int n = g.vertex_count();
    SpanningTree out;
    out.tree = Graph(n);
    if (n == 1) {
        out.dominating_set = {0};
        return out;
    }

    std::vector<bool> in_s(n, false);
    std::vector<int> tree_deg(n, 0);
    auto add_tree_edge = [&](VertexId a, VertexId b) {
        out.tree.add_edge(a, b);
        ++tree_deg[a];
        ++tree_deg[b];
    };

    VertexId seed = max_degree_vertex(g);
    in_s[seed] = true;
    for (VertexId w : g.neighbors(seed)) {
        in_s[w] = true;
        add_tree_edge(seed, w);
    }

    auto fresh = [&](VertexId v) {  // neighbors outside the grown set
        std::vector<VertexId> out_nb;
        for (VertexId w : g.neighbors(v))
            if (!in_s[w]) out_nb.push_back(w);
        return out_nb;
    };

    while (true) {
        // anything at distance >= 2 from the grown set left?
        bool far_left = false;
        for (VertexId v = 0; v < n && !far_left; ++v) {
            if (in_s[v]) continue;
            bool adjacent = false;
            for (VertexId w : g.neighbors(v)) adjacent |= in_s[w];
            if (!adjacent) far_left = true;
        }
        if (!far_left) break;

        // expand the largest-degree tree leaf that reaches new vertices
        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (!in_s[v] || tree_deg[v] != 1 || fresh(v).empty()) continue;
            if (pick == -1 || g.degree(v) > g.degree(pick)) pick = v;
        }
        for (VertexId w : fresh(pick)) {
            in_s[w] = true;
            add_tree_edge(pick, w);
        }
    }

    for (VertexId v = 0; v < n; ++v)
        if (in_s[v]) out.dominating_set.push_back(v);

    // attach the remaining distance-1 vertices to their neighbor of largest
    // current tree degree
    for (VertexId v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        VertexId host = -1;
        for (VertexId w : g.neighbors(v))
            if (in_s[w] && (host == -1 || tree_deg[w] > tree_deg[host])) host = w;
        add_tree_edge(host, v);
    }
    return out;
}

std::vector<VertexId> spanning_tree_predefined(const Graph& g, const std::vector<VertexId>& forced) {
    for (VertexId v : forced)
        if (!g.has_vertex(v)) fail("UnknownVertex", std::to_string(v));
    Graph star = g;  // add one pendant per forced vertex
    int base = g.vertex_count();
    for (VertexId v : forced) star.add_edge(v, star.add_vertex());

    auto cds = spanning_tree_max_leaf(star).dominating_set;
    std::vector<VertexId> out;
    for (VertexId v : cds)
        if (v < base) out.push_back(v);
    // a pendant is dominated only through its support, so every forced vertex
    // must have landed in the set
    for (VertexId v : forced)
        if (std::find(out.begin(), out.end(), v) == out.end())
            fail("Internal", "forced vertex missing from dominating set");
    return out;
}

Graph spanning_tree_degree_preserve(const Graph& g, int k) {
    if (!g.connected()) fail("Disconnected", "need a connected graph");
    if (!(g.min_degree() < k && k < g.max_degree()))
        fail("ThresholdOutOfRange", "need min degree < k < max degree");
    int n = g.vertex_count();

    // vertices by nonincreasing degree, ties by id
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    Graph tree(n);
    std::vector<bool> in_w(n, false);

    // phase one: closed neighborhoods of all degree >= k vertices
    auto absorb_star = [&](VertexId c) {
        in_w[c] = true;
        for (VertexId w : g.neighbors(c))
            if (!in_w[w]) {
                in_w[w] = true;
                tree.add_edge(c, w);
            }
    };
    for (VertexId v : order) {
        if (g.degree(v) < k) break;
        if (in_w[v]) {
            absorb_star(v);  // its unseen neighbors hang off v itself
            continue;
        }
        // attach through the largest-degree already-absorbed neighbor, if any
        VertexId link = -1;
        for (VertexId w : g.neighbors(v))
            if (in_w[w] && (link == -1 || g.degree(w) > g.degree(link))) link = w;
        absorb_star(v);
        if (link != -1) tree.add_edge(v, link);
    }

    // phase two: breadth-first attachment preferring high-degree vertices
    std::deque<VertexId> frontier;
    for (VertexId v : order)
        if (in_w[v]) frontier.push_back(v);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop_front();
        std::vector<VertexId> nb = g.neighbors(v);
        std::stable_sort(nb.begin(), nb.end(),
                         [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
        for (VertexId y : nb)
            if (!in_w[y]) {
                in_w[y] = true;
                tree.add_edge(v, y);
                frontier.push_back(y);
            }
    }

    // phase one may have grown disjoint islands; stitch them along graph edges
    while (!tree.connected()) {
        auto comp = tree.component_ids();
        bool stitched = false;
        for (int i = 0; i < g.edge_count() && !stitched; ++i) {
            const Edge& e = g.edge(i);
            if (comp[e.u] != comp[e.v]) {
                tree.add_edge(e.u, e.v);
                stitched = true;
            }
        }
        if (!stitched) fail("Internal", "could not stitch spanning tree");
    }
    return tree;
}

}  // namespace topsnut
