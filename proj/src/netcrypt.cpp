#include "topsnut/netcrypt.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "topsnut/error.hpp"
#include "topsnut/matrix.hpp"
#include "topsnut/rng.hpp"
#include "topsnut/spantree.hpp"

namespace topsnut {

JoinPolicy smallest_vertex_join() {
    return [](const Graph&, int) { return std::pair<VertexId, VertexId>{0, 0}; };
}

EncryptedNetwork encrypt_network(const Graph& g, const EveryZeroGraphicGroup& grp,
                                 const GroupLabelling& coloring, const JoinPolicy& policy) {
    if (coloring.n != grp.n || coloring.host.vertex_count() != g.vertex_count() ||
        coloring.host.edge_count() != g.edge_count() ||
        !group_labelling_failures(coloring).empty())
        fail("InvalidColoring", "colouring does not fit the host over this group");

    EncryptedNetwork net;
    net.host = g;
    net.grp = grp;
    net.assignment = coloring;
    for (int v = 0; v < g.vertex_count(); ++v)
        net.blocks.push_back({false, v, coloring.vertex_index.at(v)});
    for (int e = 0; e < g.edge_count(); ++e)
        net.blocks.push_back({true, e, coloring.edge_index.at(e)});

    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        auto [a1, b1] = policy(grp.base, 2 * e);
        auto [a2, b2] = policy(grp.base, 2 * e + 1);
        net.joins.push_back({net.block_of_vertex(ed.u), net.block_of_edge(e), a1, b1, 2 * e + 1});
        net.joins.push_back({net.block_of_edge(e), net.block_of_vertex(ed.v), a2, b2, 2 * e + 2});
    }

    int pb = grp.base.vertex_count();
    Graph flat(static_cast<int>(net.blocks.size()) * pb);
    for (std::size_t b = 0; b < net.blocks.size(); ++b)
        for (const Edge& ed : grp.base.edges())
            flat.add_edge(static_cast<int>(b) * pb + ed.u, static_cast<int>(b) * pb + ed.v);
    for (const JoinEdge& j : net.joins)
        flat.add_edge(net.block_offset(j.from_block) + j.a_local,
                      net.block_offset(j.to_block) + j.b_local);
    net.expanded = flat;
    return net;
}

std::vector<std::string> network_invariant_failures(const EncryptedNetwork& net) {
    std::vector<std::string> bad;
    const Graph& g = net.host;
    int p = g.vertex_count(), q = g.edge_count(), pb = net.grp.base.vertex_count();
    if (static_cast<int>(net.blocks.size()) != p + q)
        bad.push_back("block count differs from host vertices plus edges");
    if (static_cast<int>(net.joins.size()) != 2 * q)
        bad.push_back("join count differs from twice the host edges");
    for (int e = 0; e < q; ++e) {
        const Edge& ed = g.edge(e);
        int to_edge = 0, from_edge = 0;
        for (const JoinEdge& j : net.joins) {
            if (j.from_block == net.block_of_vertex(ed.u) && j.to_block == net.block_of_edge(e))
                ++to_edge;
            if (j.from_block == net.block_of_edge(e) && j.to_block == net.block_of_vertex(ed.v))
                ++from_edge;
        }
        if (to_edge != 1 || from_edge != 1)
            bad.push_back("join pattern broken at host edge " + std::to_string(e));
    }
    std::set<int> labels;
    for (const JoinEdge& j : net.joins) {
        labels.insert(j.label);
        if (!net.grp.base.has_vertex(j.a_local) || !net.grp.base.has_vertex(j.b_local))
            bad.push_back("join attaches outside the base block");
    }
    if (!net.joins.empty() &&
        (labels.size() != net.joins.size() || *labels.begin() != 1 ||
         *labels.rbegin() != static_cast<int>(net.joins.size())))
        bad.push_back("join labels are not the consecutive set");
    if (net.expanded.vertex_count() != static_cast<int>(net.blocks.size()) * pb)
        bad.push_back("flattened vertex count off");
    if (net.expanded.edge_count() !=
        static_cast<int>(net.blocks.size()) * net.grp.base.edge_count() +
            static_cast<int>(net.joins.size()))
        bad.push_back("flattened edge count off");
    if (g.connected() && net.grp.base.connected() && !net.expanded.connected())
        bad.push_back("flattened graph disconnected");
    for (const auto& s : group_labelling_failures(net.assignment)) bad.push_back("colouring: " + s);
    return bad;
}

std::vector<WalkStep> default_edge_walk(const Graph& host) {
    std::vector<WalkStep> walk;
    std::vector<char> seen_v(host.vertex_count(), 0), seen_e(host.edge_count(), 0);
    std::vector<VertexId> stack;
    for (int root = 0; root < host.vertex_count(); ++root) {
        if (seen_v[root]) continue;
        seen_v[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : host.neighbors(v)) {
                int e = *host.edge_index(v, w);
                if (seen_e[e]) continue;
                seen_e[e] = 1;
                walk.push_back({e, v});
                if (!seen_v[w]) {
                    seen_v[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return walk;
}

std::string NetworkEmission::rendered() const {
    std::string s;
    for (const auto& c : components) s += c.text;
    return s;
}

namespace {

std::string block_text(const EncryptedNetwork& net, int block, const std::string& route) {
    if (net.grp.base.edge_count() == 0)
        fail("BadShape", "block emission needs a base graph with edges");
    Labelling el = net.grp.element(net.blocks[block].element);
    return extract_tbpaw(matrix_from_graph(net.grp.base, el), route);
}

std::string join_text(const EncryptedNetwork& net, const JoinEdge& j, bool forward) {
    int near = forward ? j.from_block : j.to_block;
    int far = forward ? j.to_block : j.from_block;
    VertexId near_local = forward ? j.a_local : j.b_local;
    VertexId far_local = forward ? j.b_local : j.a_local;
    Labelling a = net.grp.element(net.blocks[near].element);
    Labelling b = net.grp.element(net.blocks[far].element);
    return std::to_string(a.vertex.at(near_local)) + std::to_string(j.label) +
           std::to_string(b.vertex.at(far_local));
}

}  // namespace

NetworkEmission emit_tbpaw(const EncryptedNetwork& net, const std::vector<WalkStep>& walk,
                           const std::string& route) {
    NetworkEmission out;
    std::map<int, std::string> cache;
    auto block = [&](int b) {
        auto it = cache.find(b);
        if (it == cache.end()) it = cache.emplace(b, block_text(net, b, route)).first;
        const BlockRef& ref = net.blocks[b];
        std::string name = (ref.edge_block ? "He" : "Hv") + std::to_string(ref.host_id);
        out.components.push_back({name, it->second, static_cast<int>(it->second.size())});
    };
    auto join = [&](const JoinEdge& j, bool fwd) {
        std::string t = join_text(net, j, fwd);
        out.components.push_back({"J" + std::to_string(j.label), t, static_cast<int>(t.size())});
    };

    if (walk.empty() && net.host.vertex_count() > 0) block(net.block_of_vertex(0));
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int e = walk[i].edge;
        if (e < 0 || e >= net.host.edge_count()) fail("BadWalk", "edge index out of range");
        const Edge& ed = net.host.edge(e);
        if (!ed.touches(walk[i].from)) fail("BadWalk", "walk step enters an edge from elsewhere");
        bool from_u = walk[i].from == ed.u;
        const JoinEdge& j1 = net.joins[2 * e];      // vertex u side
        const JoinEdge& j2 = net.joins[2 * e + 1];  // vertex v side
        if (i == 0) block(net.block_of_vertex(walk[i].from));
        if (from_u) {
            join(j1, true);
            block(net.block_of_edge(e));
            join(j2, true);
            block(net.block_of_vertex(ed.v));
        } else {
            join(j2, false);
            block(net.block_of_edge(e));
            join(j1, false);
            block(net.block_of_vertex(ed.u));
        }
    }
    for (const auto& c : out.components) out.total += c.length;
    return out;
}

Graph read_snapshot(std::istream& in, long long& t) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string word;
        if (!(is >> word)) continue;
        if (word != "t") fail("BadSnapshotFile", "expected a 't <timestep>' header");
        if (!(is >> t)) fail("BadSnapshotFile", "unreadable timestep");
        return read_graph(in);
    }
    fail("BadSnapshotFile", "empty snapshot");
}

Graph load_snapshot(const std::string& path, long long& t) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    return read_snapshot(in, t);
}

void save_snapshot(const std::string& path, const Graph& g, long long t) {
    std::ofstream out(path);
    if (!out) fail("FileNotFound", path);
    out << "t " << t << "\n";
    write_graph(out, g);
}

// connected dominating set to spanning tree: span the set first, then hang
// every remaining vertex off its smallest dominating neighbour
Graph tree_from_dominating_set(const Graph& g, const std::vector<VertexId>& dom) {
    std::vector<char> in_dom(g.vertex_count(), 0);
    for (VertexId v : dom) in_dom[v] = 1;
    Graph tree(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> queue{dom.front()};
    seen[dom.front()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        for (VertexId w : g.neighbors(v)) {
            if (!in_dom[w] || seen[w]) continue;
            seen[w] = 1;
            tree.add_edge(v, w);
            queue.push_back(w);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_dom[v]) continue;
        for (VertexId w : g.neighbors(v))
            if (in_dom[w]) {
                tree.add_edge(w, v);
                break;
            }
    }
    return tree;
}

PipelineResult pipeline_encrypt(const Graph& snapshot, long long timestep,
                                const EveryZeroGraphicGroup& grp, char tree_algo,
                                std::uint64_t seed) {
    if (!snapshot.connected()) fail("NotConnected", "snapshot must be connected");
    PipelineResult res;
    res.snapshot = snapshot;
    res.timestep = timestep;
    switch (tree_algo) {
        case 'A':
            res.tree = spanning_tree_max_leaf(snapshot).tree;
            break;
        case 'B': {
            VertexId hub = 0;
            for (int v = 1; v < snapshot.vertex_count(); ++v)
                if (snapshot.degree(v) > snapshot.degree(hub)) hub = v;
            res.tree = tree_from_dominating_set(snapshot, spanning_tree_predefined(snapshot, {hub}));
            break;
        }
        case 'C':
            res.tree = spanning_tree_degree_preserve(snapshot, snapshot.max_degree());
            break;
        default:
            fail("BadAlgorithm", "tree algorithm must be A, B or C");
    }

    Lcg rng(seed);
    int n = grp.n;
    int zero = rng.range(1, n);
    std::vector<int> seq(res.tree.edge_count());
    for (int& x : seq) x = rng.range(1, n);
    res.coloring = tree_group_coloring(res.tree, grp, seq, zero, 0);
    res.net = encrypt_network(res.tree, grp, res.coloring);
    res.emission = emit_tbpaw(res.net, default_edge_walk(res.tree), "rows");
    return res;
}

GroupLabelling SelfSimilarSeries::self_coloring(int e) const {
    std::vector<int> seq(base.edge_count());
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<int>(i % n) + 1;
    return tree_group_coloring(base, grp, seq, e, 0);
}

SelfSimilarSeries self_similar_generate(const Graph& h, const Labelling& f,
                                        const EveryZeroGraphicGroup& grp, int steps,
                                        const JoinPolicy& policy) {
    if (steps < 1) fail("BadSteps", "need at least one generation");
    SelfSimilarSeries series;
    series.base = h;
    series.n = grp.n;
    series.grp = grp;
    (void)f;

    int p = h.vertex_count(), q = h.edge_count(), pb = p + q;
    std::map<int, GroupLabelling> colorings;
    auto coloring_for = [&](int e) -> const GroupLabelling& {
        auto it = colorings.find(e);
        if (it == colorings.end()) it = colorings.emplace(e, series.self_coloring(e)).first;
        return it->second;
    };

    std::vector<SelfBlock> blocks{{1}};
    std::vector<SelfJoin> joins;
    int next_join_id = 1;
    for (int step = 0; step < steps; ++step) {
        if (blocks.size() * static_cast<std::size_t>(pb) > 200000)
            fail("SizeLimitExceeded", "generation too large");
        std::vector<SelfBlock> nb(blocks.size() * pb);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const GroupLabelling& col = coloring_for(blocks[b].element);
            for (int v = 0; v < p; ++v) nb[b * pb + v] = {col.vertex_index.at(v)};
            for (int t = 0; t < q; ++t) nb[b * pb + p + t] = {col.edge_index.at(t)};
        }
        std::vector<SelfJoin> nj;
        for (const SelfJoin& j : joins)  // carried joins follow their attachment vertices
            nj.push_back({j.id, j.label, j.from_block * pb + j.a_local,
                          j.to_block * pb + j.b_local, j.a_local, j.b_local});
        int label = 0;
        for (auto& j : nj) j.label = ++label;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int t = 0; t < q; ++t) {
                const Edge& ed = h.edge(t);
                auto [a1, b1] = policy(h, 2 * t);
                auto [a2, b2] = policy(h, 2 * t + 1);
                int base_block = static_cast<int>(b) * pb;
                nj.push_back({next_join_id++, ++label, base_block + ed.u, base_block + p + t,
                              a1, b1});
                nj.push_back({next_join_id++, ++label, base_block + p + t, base_block + ed.v,
                              a2, b2});
            }
        blocks = std::move(nb);
        joins = std::move(nj);

        SelfGeneration gen;
        gen.blocks = blocks;
        gen.joins = joins;
        Graph flat(static_cast<int>(blocks.size()) * p);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (const Edge& ed : h.edges())
                flat.add_edge(static_cast<int>(b) * p + ed.u, static_cast<int>(b) * p + ed.v);
        for (const SelfJoin& j : joins)
            flat.add_edge(j.from_block * p + j.a_local, j.to_block * p + j.b_local);
        gen.flattened = flat;
        gen.labelled_edge_count = static_cast<long long>(blocks.size()) * q;
        series.generations.push_back(std::move(gen));
    }
    return series;
}

GroupLabelling NetworkGroup::element(int i) const {
    if (i < 1 || i > n) fail("IndexOutOfRange", "network element index");
    GroupLabelling gl = base.assignment;
    auto shift = [&](int idx) { return (idx + i - 2) % n + 1; };
    for (auto& [v, idx] : gl.vertex_index) idx = shift(idx);
    for (auto& [e, idx] : gl.edge_index) idx = shift(idx);
    for (auto& s : gl.sequence) s = shift((s - 1) % n + 1);
    gl.zero = shift(gl.zero);
    return gl;
}

int NetworkGroup::add(int i, int j, int zero) const {
    long long r = (static_cast<long long>(i) + j - zero) % n;
    if (r <= 0) r += n;
    return static_cast<int>(r);
}

NetworkGroup derived_group_from_network(const EncryptedNetwork& net) {
    if (!net.assignment.proper_labelling)
        fail("NotGroupLabelled", "derived group needs distinct vertex elements");
    return NetworkGroup{net, net.grp.n};
}

std::vector<std::string> network_group_axiom_failures(const NetworkGroup& ng) {
    std::vector<std::string> bad;
    int n = ng.n;
    std::vector<GroupLabelling> els;
    els.reserve(n);
    for (int i = 1; i <= n; ++i) els.push_back(ng.element(i));
    auto idx_of = [&](const GroupLabelling& gl, bool edge, int id) {
        return edge ? gl.edge_index.at(id) : gl.vertex_index.at(id);
    };
    for (int k = 1; k <= n && bad.size() < 10; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const GroupLabelling& sum = els[ng.add(i, j, k) - 1];
                for (const BlockRef& blk : ng.base.blocks) {
                    int a = idx_of(els[i - 1], blk.edge_block, blk.host_id);
                    int b = idx_of(els[j - 1], blk.edge_block, blk.host_id);
                    int c = idx_of(els[k - 1], blk.edge_block, blk.host_id);
                    int want = idx_of(sum, blk.edge_block, blk.host_id);
                    int got = ((a + b - c) % n + n) % n;
                    if (got == 0) got = n;
                    if (got != want) {
                        bad.push_back("network sum fails at block for host item " +
                                      std::to_string(blk.host_id));
                        break;
                    }
                }
            }
    return bad;
}

void write_network(std::ostream& os, const EncryptedNetwork& net) {
    os << "host " << net.host.vertex_count() << " " << net.host.edge_count() << "\n";
    for (const Edge& e : net.host.edges()) os << e.u << " " << e.v << "\n";
    os << "group n " << net.grp.n << " zero " << net.assignment.zero << "\n";
    os << "blocks " << net.blocks.size() << "\n";
    for (std::size_t b = 0; b < net.blocks.size(); ++b)
        os << "block " << b << " " << (net.blocks[b].edge_block ? "e" : "v") << " "
           << net.blocks[b].host_id << " element " << net.blocks[b].element << "\n";
    os << "joins " << net.joins.size() << "\n";
    for (const JoinEdge& j : net.joins)
        os << "join " << j.label << " " << j.from_block << " " << j.a_local << " "
           << j.to_block << " " << j.b_local << "\n";
}

}  // namespace topsnut
