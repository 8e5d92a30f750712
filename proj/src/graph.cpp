#include "topsnut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "topsnut/rng.hpp"

namespace topsnut {

void Graph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v))
        fail("UnknownVertex", "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) fail("SelfLoop", "vertex " + std::to_string(u));
    if (has_edge(u, v))
        fail("DuplicateEdge", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges_.push_back({u, v});
}

std::optional<int> Graph::edge_index(VertexId u, VertexId v) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].same(u, v)) return i;
    return std::nullopt;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Edge& e : edges_)
        if (e.touches(v)) out.push_back(e.other(v));
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.touches(v)) ++d;
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (VertexId v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (VertexId s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const Edge& e : edges_)
                if (e.touches(v) && comp[e.other(v)] == -1) {
                    comp[e.other(v)] = next;
                    q.push(e.other(v));
                }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool Graph::connected() const { return component_count() <= 1; }

bool Graph::is_tree() const {
    return n_ >= 1 && edge_count() == n_ - 1 && connected();
}

std::vector<VertexId> Graph::leaves() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> Graph::bipartition() const {
    std::vector<int> color(n_, -1);
    for (VertexId s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const Edge& e : edges_) {
                if (!e.touches(v)) continue;
                VertexId w = e.other(v);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<VertexId> x, y;
    for (VertexId v = 0; v < n_; ++v) (color[v] == 0 ? x : y).push_back(v);
    return std::make_pair(x, y);
}

Graph Graph::without_vertices(const std::vector<VertexId>& drop) const {
    std::vector<bool> gone(n_, false);
    for (VertexId v : drop) {
        if (!has_vertex(v)) fail("UnknownVertex", std::to_string(v));
        gone[v] = true;
    }
    std::vector<int> remap(n_, -1);
    int next = 0;
    for (VertexId v = 0; v < n_; ++v)
        if (!gone[v]) remap[v] = next++;
    Graph out(next);
    for (const Edge& e : edges_)
        if (!gone[e.u] && !gone[e.v]) out.add_edge(remap[e.u], remap[e.v]);
    return out;
}

// --- io ---------------------------------------------------------------

static std::vector<long long> read_ints(std::istream& in) {
    std::vector<long long> vals;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x;
        while (ls >> x) vals.push_back(x);
    }
    return vals;
}

Graph read_graph(std::istream& in) {
    auto vals = read_ints(in);
    if (vals.size() < 2) fail("BadGraphFile", "missing p q header");
    long long p = vals[0], q = vals[1];
    if (p < 0 || q < 0 || vals.size() != static_cast<std::size_t>(2 + 2 * q))
        fail("BadGraphFile", "expected " + std::to_string(2 * q) + " endpoint ints");
    Graph g(static_cast<int>(p));
    for (long long i = 0; i < q; ++i)
        g.add_edge(static_cast<int>(vals[2 + 2 * i]), static_cast<int>(vals[3 + 2 * i]));
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) fail("FileNotWritable", path);
    write_graph(out, g);
}

// --- generators -------------------------------------------------------

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) fail("BadOrder", "cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph caterpillar_graph(const std::vector<int>& leaf_counts) {
    int s = static_cast<int>(leaf_counts.size());
    Graph g(s);
    for (int i = 0; i + 1 < s; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < leaf_counts[i]; ++j) g.add_edge(i, g.add_vertex());
    return g;
}

Graph spider_graph(int direct_leaves, const std::vector<int>& leg_lengths) {
    Graph g(1);
    for (int j = 0; j < direct_leaves; ++j) g.add_edge(0, g.add_vertex());
    for (int len : leg_lengths) {
        if (len < 2) fail("BadLegLength", "legs are paths of length >= 2");
        VertexId prev = 0;
        for (int j = 0; j < len; ++j) {
            VertexId next = g.add_vertex();
            g.add_edge(prev, next);
            prev = next;
        }
    }
    return g;
}

Graph random_tree(int n, Lcg& rng) {
    if (n <= 0) fail("BadOrder", "need >= 1 vertex");
    Graph g(n);
    if (n == 1) return g;
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(rng.below(n));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    // classic decode: smallest leaf pairs with the next sequence entry
    std::vector<bool> used(n, false);
    for (int x : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        used[leaf] = true;
        g.add_edge(leaf, x);
        --deg[x];
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) rest.push_back(v);
    g.add_edge(rest[0], rest[1]);
    return g;
}

Graph preferential_attachment(int n, int m, Lcg& rng) {
    if (m < 1 || n < m + 1) fail("BadOrder", "need n >= m+1, m >= 1");
    Graph g = complete_graph(m + 1);
    std::vector<VertexId> bag;  // degree-weighted endpoint pool
    for (const Edge& e : g.edges()) {
        bag.push_back(e.u);
        bag.push_back(e.v);
    }
    while (g.vertex_count() < n) {
        VertexId v = g.add_vertex();
        std::vector<VertexId> targets;
        while (static_cast<int>(targets.size()) < m) {
            VertexId t = bag[rng.below(bag.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (VertexId t : targets) {
            g.add_edge(v, t);
            bag.push_back(v);
            bag.push_back(t);
        }
    }
    return g;
}

Graph bridged_cliques() {
    Graph g(12);
    for (int base : {0, 6})
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) g.add_edge(base + i, base + j);
    g.add_edge(0, 6);
    g.add_edge(0, 7);
    g.add_edge(1, 8);
    g.add_edge(2, 9);
    g.add_edge(3, 10);
    return g;
}

// --- tree classification ----------------------------------------------

std::string to_string(TreeKind k) {
    switch (k) {
        case TreeKind::path: return "path";
        case TreeKind::caterpillar: return "caterpillar";
        case TreeKind::lobster: return "lobster";
        case TreeKind::spider: return "spider";
        case TreeKind::general_tree: return "general-tree";
        case TreeKind::non_tree: return "non-tree";
    }
    return "?";
}

Graph delete_leaves(const Graph& g) { return g.without_vertices(g.leaves()); }

static bool path_shape(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return g.is_tree() && g.max_degree() <= 2;
}

TreeClass classify_tree(const Graph& g) {
    TreeClass tc;
    tc.witness = {g.vertex_count()};
    if (!g.is_tree()) {
        tc.kind = TreeKind::non_tree;
        return tc;
    }
    Graph d1 = delete_leaves(g);
    tc.witness.push_back(d1.vertex_count());
    if (path_shape(g)) {
        tc.kind = TreeKind::path;
        return tc;
    }
    if (d1.vertex_count() > 0 && path_shape(d1)) {
        tc.kind = TreeKind::caterpillar;
        return tc;
    }
    Graph d2 = delete_leaves(d1);
    tc.witness.push_back(d2.vertex_count());
    if (d2.vertex_count() > 0 && path_shape(d2)) {
        tc.kind = TreeKind::lobster;
        return tc;
    }
    int big = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) ++big;
    tc.kind = big == 1 ? TreeKind::spider : TreeKind::general_tree;
    return tc;
}

bool leaf_identity_check(const Graph& t) {
    if (!t.is_tree() || t.vertex_count() < 2) fail("NotATree", "leaf identity needs a tree with >= 2 vertices");
    long long n1 = 0, rhs = 2;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        int d = t.degree(v);
        if (d == 1) ++n1;
        if (d >= 3) rhs += d - 2;
    }
    return n1 == rhs;
}

// --- split / coincide -------------------------------------------------

SplitResult vertex_split(const Graph& g, VertexId v, const std::vector<VertexId>& side_a,
                         const std::vector<VertexId>& side_b) {
    if (!g.has_vertex(v)) fail("UnknownVertex", std::to_string(v));
    if (side_a.empty() || side_b.empty()) fail("EmptyPartitionSide", "both sides must be nonempty");
    auto nb = g.neighbors(v);
    std::vector<VertexId> merged = side_a;
    merged.insert(merged.end(), side_b.begin(), side_b.end());
    std::sort(merged.begin(), merged.end());
    if (merged != nb) fail("BadPartition", "sides must partition the neighborhood exactly");

    SplitResult r;
    r.graph = Graph(g.vertex_count());
    VertexId twin = r.graph.add_vertex();
    for (const Edge& e : g.edges()) {
        if (!e.touches(v)) {
            r.graph.add_edge(e.u, e.v);
            continue;
        }
        VertexId w = e.other(v);
        bool on_b = std::find(side_b.begin(), side_b.end(), w) != side_b.end();
        r.graph.add_edge(on_b ? twin : v, w);
    }
    r.provenance[twin] = v;
    r.provenance[v] = v;
    return r;
}

Graph vertex_coincide(const Graph& g, VertexId x, VertexId y) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) fail("UnknownVertex", "need two distinct vertices");
    if (g.has_edge(x, y)) fail("AdjacentVertices", "coinciding adjacent vertices forms a loop");
    auto nx = g.neighbors(x), ny = g.neighbors(y);
    std::vector<VertexId> common;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
    if (!common.empty())
        fail("OverlappingNeighborhoods", "shared neighbor " + std::to_string(common.front()));

    Graph out(g.vertex_count() - 1);
    auto remap = [&](VertexId v) {
        if (v == y) v = x;
        return v > y ? v - 1 : v;
    };
    for (const Edge& e : g.edges()) out.add_edge(remap(e.u), remap(e.v));
    return out;
}

SplitResult edge_split(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) fail("UnknownEdge", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    SplitResult r;
    r.graph = Graph(g.vertex_count());
    for (const Edge& e : g.edges()) r.graph.add_edge(e.u, e.v);
    VertexId u2 = r.graph.add_vertex();
    VertexId v2 = r.graph.add_vertex();
    r.graph.add_edge(u2, v2);
    r.provenance[u2] = u;
    r.provenance[v2] = v;
    return r;
}

Graph edge_coincide(const Graph& g, VertexId x, VertexId y, VertexId u, VertexId v) {
    if (!g.has_edge(x, y)) fail("UnknownEdge", "(" + std::to_string(x) + "," + std::to_string(y) + ")");
    if (!g.has_edge(u, v)) fail("UnknownEdge", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<VertexId> four{x, y, u, v};
    std::sort(four.begin(), four.end());
    if (std::unique(four.begin(), four.end()) != four.end())
        fail("ConditionViolation", "the two edges must not share a vertex");

    std::string bad;
    auto check = [&](VertexId a, VertexId b, const std::string& name) {
        auto na = g.neighbors(a), nb = g.neighbors(b);
        std::vector<VertexId> common;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
        // the merged pair itself may not be adjacent either, or a loop forms
        if (!common.empty() || g.has_edge(a, b)) bad += (bad.empty() ? "" : ", ") + name;
    };
    check(x, u, "N(x)&N(u)");
    check(x, v, "N(x)&N(v)");
    check(y, u, "N(y)&N(u)");
    check(y, v, "N(y)&N(v)");
    if (!bad.empty()) fail("ConditionViolation", bad);

    // merge u into x and v into y; the doubled edge collapses onto xy
    std::vector<int> remap(g.vertex_count());
    int next = 0;
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        remap[w] = (w == u || w == v) ? -1 : next++;
    remap[u] = remap[x];
    remap[v] = remap[y];
    Graph out(next);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.same(u, v)) continue;  // collapses onto the xy edge
        out.add_edge(remap[e.u], remap[e.v]);
    }
    return out;
}

}  // namespace topsnut
