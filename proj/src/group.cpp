#include "topsnut/group.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {

namespace {

int norm_index(long long x, int n) {
    long long r = x % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

}  // namespace

Labelling EveryZeroGraphicGroup::element(int i) const {
    if (i < 1 || i > n) fail("IndexOutOfRange", "element index " + std::to_string(i));
    Labelling h = f;
    for (auto& [v, lab] : h.vertex) lab = ((lab + i - 1) % n + n) % n;
    return h;
}

int EveryZeroGraphicGroup::add(int i, int j, int zero) const {
    if (i < 1 || i > n || j < 1 || j > n || zero < 1 || zero > n)
        fail("IndexOutOfRange", "add needs indices in [1,n]");
    return norm_index(static_cast<long long>(i) + j - zero, n);
}

EveryZeroGraphicGroup build_group(const Graph& h, const Labelling& f, int n) {
    if (n < 2) fail("BadOrder", "group order must be at least 2");
    if (f.vertex.size() != static_cast<std::size_t>(h.vertex_count()))
        fail("MissingLabel", "group base labelling must cover every vertex");
    return EveryZeroGraphicGroup{h, f, n};
}

std::vector<std::string> group_axiom_failures(const EveryZeroGraphicGroup& grp) {
    std::vector<std::string> bad;
    int n = grp.n;
    auto say = [&](const std::string& s) {
        if (bad.size() < 20) bad.push_back(s);
    };
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
            if (grp.add(i, k, k) != i) say("zero law fails at i=" + std::to_string(i));
            for (int j = 1; j <= n; ++j) {
                int ij = grp.add(i, j, k);
                if (ij < 1 || ij > n) say("closure fails");
                if (ij != grp.add(j, i, k)) say("commutativity fails");
                for (int l = 1; l <= n; ++l)
                    if (grp.add(ij, l, k) != grp.add(i, grp.add(j, l, k), k))
                        say("associativity fails");
            }
        }
        // the index equation holds on actual vertex labels too
        Labelling hk = grp.element(k);
        for (int i = 1; i <= n; ++i) {
            Labelling hi = grp.element(i);
            for (int j = 1; j <= n; ++j) {
                Labelling hj = grp.element(j);
                Labelling hs = grp.element(grp.add(i, j, k));
                for (const auto& [v, lab] : hi.vertex) {
                    int lhs = ((lab + hj.vertex.at(v) - hk.vertex.at(v)) % n + n) % n;
                    if (lhs != hs.vertex.at(v)) say("elementwise sum fails at vertex " + std::to_string(v));
                }
            }
        }
    }
    return bad;
}

std::vector<std::string> group_labelling_failures(const GroupLabelling& gl) {
    std::vector<std::string> bad;
    int n = gl.n;
    if (n < 2) return {"order below 2"};
    if (gl.zero < 1 || gl.zero > n) bad.push_back("zero out of range");
    for (int v = 0; v < gl.host.vertex_count(); ++v) {
        auto it = gl.vertex_index.find(v);
        if (it == gl.vertex_index.end()) bad.push_back("vertex " + std::to_string(v) + " unassigned");
        else if (it->second < 1 || it->second > n)
            bad.push_back("vertex index out of range at " + std::to_string(v));
    }
    for (int e = 0; e < gl.host.edge_count(); ++e) {
        auto it = gl.edge_index.find(e);
        if (it == gl.edge_index.end()) {
            bad.push_back("edge " + std::to_string(e) + " unassigned");
            continue;
        }
        const Edge& ed = gl.host.edge(e);
        auto u = gl.vertex_index.find(ed.u), v = gl.vertex_index.find(ed.v);
        if (u == gl.vertex_index.end() || v == gl.vertex_index.end()) continue;
        int want = norm_index(static_cast<long long>(u->second) + v->second - gl.zero, n);
        if (it->second != want)
            bad.push_back("edge rule fails at edge " + std::to_string(e));
    }
    std::multiset<int> have, want;
    for (const auto& [e, idx] : gl.edge_index) have.insert(idx);
    for (int s : gl.sequence) want.insert(norm_index(s, n));
    if (have != want) bad.push_back("edge indices differ from the prescribed sequence");
    return bad;
}

namespace {

// Frontier rule shared by the tree and ring colourings. `start` must carry
// an index already; spends seq[pos..] on every allowed edge reachable from
// start. Stars fire first at start, then at the smallest unassigned vertex
// with an assigned neighbour.
void star_extend(const Graph& g, const std::vector<char>& edge_allowed, int n, int zero,
                 const std::vector<int>& seq, std::size_t& pos,
                 std::map<VertexId, int>& vidx, std::map<int, int>& eidx, VertexId start) {
    auto spend = [&](int e) {
        if (pos >= seq.size()) fail("SequenceLengthMismatch", "sequence exhausted");
        eidx[e] = norm_index(seq[pos++], n);
    };
    // reachable region through allowed edges
    std::vector<char> in(g.vertex_count(), 0);
    std::vector<VertexId> stack{start};
    in[start] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            auto e = g.edge_index(v, w);
            if (!edge_allowed[*e] || in[w]) continue;
            in[w] = 1;
            stack.push_back(w);
        }
    }

    int base = vidx.at(start);
    for (VertexId w : g.neighbors(start)) {
        auto e = g.edge_index(start, w);
        if (!edge_allowed[*e]) continue;
        spend(*e);
        vidx[w] = norm_index(static_cast<long long>(zero) - base + eidx[*e], n);
    }
    for (;;) {
        VertexId centre = -1, parent = -1;
        for (int v = 0; v < g.vertex_count() && centre < 0; ++v) {
            if (!in[v] || vidx.count(v)) continue;
            for (VertexId w : g.neighbors(v)) {
                auto e = g.edge_index(v, w);
                if (edge_allowed[*e] && vidx.count(w)) {
                    centre = v;
                    parent = w;
                    break;
                }
            }
        }
        if (centre < 0) break;
        int pe = *g.edge_index(centre, parent);
        spend(pe);
        vidx[centre] = norm_index(static_cast<long long>(zero) - vidx.at(parent) + eidx[pe], n);
        for (VertexId w : g.neighbors(centre)) {
            if (w == parent) continue;
            auto e = g.edge_index(centre, w);
            if (!edge_allowed[*e] || eidx.count(*e)) continue;
            spend(*e);
            vidx[w] = norm_index(static_cast<long long>(zero) - vidx.at(centre) + eidx[*e], n);
        }
    }
}

bool distinct_vertex_indices(const GroupLabelling& gl) {
    std::set<int> seen;
    for (const auto& [v, idx] : gl.vertex_index)
        if (!seen.insert(idx).second) return false;
    return true;
}

}  // namespace

GroupLabelling tree_group_coloring(const Graph& t, const EveryZeroGraphicGroup& grp,
                                   const std::vector<int>& edge_sequence, int zero,
                                   VertexId start) {
    if (!t.is_tree()) fail("NotATree", "group colouring needs a tree host");
    if (static_cast<int>(edge_sequence.size()) != t.edge_count())
        fail("SequenceLengthMismatch", "need one sequence element per edge");
    int n = grp.n;
    if (zero < 1 || zero > n) fail("IndexOutOfRange", "zero outside [1,n]");
    if (!t.has_vertex(start)) fail("IndexOutOfRange", "start vertex missing");

    GroupLabelling gl;
    gl.host = t;
    gl.n = n;
    gl.zero = zero;
    gl.sequence = edge_sequence;
    gl.vertex_index[start] = zero;
    std::size_t pos = 0;
    std::vector<char> allowed(t.edge_count(), 1);
    star_extend(t, allowed, n, zero, edge_sequence, pos, gl.vertex_index, gl.edge_index, start);
    gl.proper_labelling = distinct_vertex_indices(gl);
    return gl;
}

GroupLabelling complete_bipartite_group_labelling(int m, int n_cols,
                                                  const EveryZeroGraphicGroup& grp, int a,
                                                  int b) {
    int n = grp.n;
    if (norm_index(b, n) == n) fail("DegenerateParameters", "step b vanishes mod the order");
    GroupLabelling gl;
    gl.host = complete_bipartite(m, n_cols);
    gl.n = n;
    gl.zero = norm_index(a, n);
    for (int k = 0; k < m; ++k)
        gl.vertex_index[k] = norm_index(a + static_cast<long long>(k) * n_cols * b, n);
    for (int j = 0; j < n_cols; ++j)
        gl.vertex_index[m + j] = norm_index(a + static_cast<long long>(j) * b, n);
    for (int e = 0; e < gl.host.edge_count(); ++e) {
        int idx = norm_index(a + static_cast<long long>(e) * b, n);
        gl.edge_index[e] = idx;
        gl.sequence.push_back(idx);
    }
    gl.proper_labelling = distinct_vertex_indices(gl);
    return gl;
}

GroupLabelling ring_like_group_labelling(const Graph& nr, const EveryZeroGraphicGroup& grp,
                                         const std::vector<int>& s,
                                         const std::vector<int>& s_star) {
    if (!nr.connected() || nr.edge_count() != nr.vertex_count())
        fail("NotRingLike", "host must be connected with exactly one cycle");
    // strip leaves until the cycle remains
    std::vector<char> alive(nr.vertex_count(), 1);
    for (;;) {
        std::vector<VertexId> drop;
        for (int v = 0; v < nr.vertex_count(); ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (VertexId w : nr.neighbors(v))
                if (alive[w]) ++deg;
            if (deg <= 1) drop.push_back(v);
        }
        if (drop.empty()) break;
        for (VertexId v : drop) alive[v] = 0;
    }
    std::vector<VertexId> cyc;
    for (int v = 0; v < nr.vertex_count(); ++v)
        if (alive[v]) cyc.push_back(v);
    int m = static_cast<int>(cyc.size());
    if (m < 3) fail("NotRingLike", "no cycle found");
    if (m > 8) fail("SizeLimitExceeded", "cycle colouring search covers cycles up to 8");
    if (static_cast<int>(s_star.size()) != m)
        fail("SizeMismatch", "cycle needs exactly one element per cycle edge");
    if (static_cast<int>(s.size()) != nr.edge_count() - m)
        fail("SizeMismatch", "trees need one element per remaining edge");

    // walk the cycle from its smallest vertex toward its smaller neighbour
    int n = grp.n;
    std::vector<VertexId> order{cyc.front()};
    {
        std::vector<VertexId> nb;
        for (VertexId w : nr.neighbors(order[0]))
            if (alive[w]) nb.push_back(w);
        VertexId prev = order[0], cur = std::min(nb[0], nb[1]);
        while (cur != order[0]) {
            order.push_back(cur);
            for (VertexId w : nr.neighbors(cur)) {
                if (!alive[w] || w == prev) continue;
                prev = cur;
                cur = w;
                break;
            }
        }
    }

    GroupLabelling gl;
    gl.host = nr;
    gl.n = n;
    gl.sequence = s_star;
    gl.sequence.insert(gl.sequence.end(), s.begin(), s.end());

    // search: zero choice, first index, cycle-edge permutation of s_star
    std::vector<int> perm = s_star;
    for (int& x : perm) x = norm_index(x, n);
    std::sort(perm.begin(), perm.end());
    bool found = false;
    for (int zero = 1; zero <= n && !found; ++zero) {
        for (int first = 1; first <= n && !found; ++first) {
            std::vector<int> p = perm;
            do {
                std::vector<int> vi(m);
                vi[0] = first;
                for (int i = 0; i + 1 < m; ++i)
                    vi[i + 1] = norm_index(static_cast<long long>(zero) - vi[i] + p[i], n);
                int closing = norm_index(static_cast<long long>(vi[m - 1]) + vi[0] - zero, n);
                if (closing == p[m - 1]) {
                    gl.zero = zero;
                    for (int i = 0; i < m; ++i) {
                        gl.vertex_index[order[i]] = vi[i];
                        int e = *nr.edge_index(order[i], order[(i + 1) % m]);
                        gl.edge_index[e] = p[i];
                    }
                    found = true;
                    break;
                }
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    if (!found) fail("NoCycleColoring", "no assignment matches the cycle sequence");

    // hanging trees, cycle roots in ascending order
    std::vector<char> tree_edges(nr.edge_count(), 1);
    for (int i = 0; i < m; ++i)
        tree_edges[*nr.edge_index(order[i], order[(i + 1) % m])] = 0;
    std::size_t pos = 0;
    std::vector<int> treeseq = s;
    for (VertexId root : cyc)
        star_extend(nr, tree_edges, n, gl.zero, treeseq, pos, gl.vertex_index, gl.edge_index,
                    root);
    gl.proper_labelling = distinct_vertex_indices(gl);
    return gl;
}

GroupFile read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string word;
        if (!(is >> word)) continue;
        GroupFile gf;
        std::string kw_n, kw_base;
        if (word != "group" || !(is >> kw_n >> gf.n >> kw_base >> gf.graph_path >>
                                 gf.labelling_path) ||
            kw_n != "n" || kw_base != "base")
            fail("BadGroupFile", "expected: group n <order> base <graph> <labelling>");
        return gf;
    }
    fail("BadGroupFile", "empty group file: " + path);
}

EveryZeroGraphicGroup load_group(const std::string& path) {
    GroupFile gf = read_group_file(path);
    auto dir = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (dir / fp).string();
    };
    Graph g = read_graph_file(resolve(gf.graph_path));
    Scheme scheme;
    Labelling f = load_labelling(resolve(gf.labelling_path), g, scheme);
    return build_group(g, f, gf.n);
}

}  // namespace topsnut
