#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/group.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/netcrypt.hpp"
#include "topsnut/spantree.hpp"

using namespace topsnut;

namespace {

EveryZeroGraphicGroup grp14() { return load_group(data_path("grp14.grp")); }

EncryptedNetwork sample_net(const Graph& host) {
    auto grp = grp14();
    std::vector<int> seq;
    for (int e = 1; e <= host.edge_count(); ++e) seq.push_back(e);
    auto gl = tree_group_coloring(host, grp, seq, 1, 0);
    return encrypt_network(host, grp, gl, smallest_vertex_join());
}

}  // namespace

TEST_SUITE("netcrypt") {

TEST_CASE("two vertex host gives three blocks and two joins") {
    EncryptedNetwork net = sample_net(path_graph(2));
    CHECK(net.blocks.size() == 3);
    CHECK(net.joins.size() == 2);
    CHECK(network_invariant_failures(net).empty());
    CHECK(net.joins[0].label == 1);
    CHECK(net.joins[1].label == 2);
}

TEST_CASE("block count tracks the host size") {
    for (int n : {3, 5, 8}) {
        Graph host = path_graph(n);
        EncryptedNetwork net = sample_net(host);
        CHECK((int)net.blocks.size() == host.vertex_count() + host.edge_count());
        CHECK((int)net.joins.size() == 2 * host.edge_count());
        CHECK(network_invariant_failures(net).empty());
        CHECK(net.expanded.vertex_count() ==
              (int)net.blocks.size() * net.grp.base.vertex_count());
    }
}

TEST_CASE("default walk visits every edge once from a known side") {
    Graph host = read_graph_file(data_path("tree13.g"));
    auto walk = default_edge_walk(host);
    REQUIRE((int)walk.size() == host.edge_count());
    std::set<int> seen;
    for (auto& st : walk) {
        CHECK(!seen.count(st.edge));
        seen.insert(st.edge);
        CHECK(host.edge(st.edge).touches(st.from));
    }
}

TEST_CASE("emission accounting is exact") {
    EncryptedNetwork net = sample_net(read_graph_file(data_path("tree13.g")));
    auto em = emit_tbpaw(net, default_edge_walk(net.host), "rows");
    // every host edge contributes two joins, an edge block and a far block
    CHECK(em.components.size() == 1 + 4 * net.host.edge_count());
    int total = 0;
    std::string joined;
    for (auto& c : em.components) {
        CHECK((int)c.text.size() == c.length);
        total += c.length;
        joined += c.text;
    }
    CHECK(total == em.total);
    CHECK(joined == em.rendered());
}

TEST_CASE("single block networks emit that block alone") {
    EncryptedNetwork net = sample_net(Graph(1));
    CHECK(net.blocks.size() == 1);
    auto em = emit_tbpaw(net, {}, "rows");
    REQUIRE(em.components.size() == 1);
    CHECK(em.components[0].text == em.rendered());
    CHECK(em.total > 0);
}

TEST_CASE("snapshot files round trip") {
    long long t = 0;
    Graph g = load_snapshot(data_path("net50.snap"), t);
    CHECK(t == 7);
    CHECK(g.vertex_count() == 50);
    CHECK(g.connected());
    std::stringstream ss;
    ss << "t 99\n";
    write_graph(ss, g);
    long long t2 = 0;
    Graph h = read_snapshot(ss, t2);
    CHECK(t2 == 99);
    CHECK(h.edge_count() == g.edge_count());
}

TEST_CASE("dominating set spans into a tree") {
    Graph g = read_graph_file(data_path("cycle8.g"));
    auto dom = spanning_tree_predefined(g, {0});
    CHECK(is_connected_dominating_set(g, dom));
    Graph tree = tree_from_dominating_set(g, dom);
    CHECK(is_spanning_tree(g, tree));
}

TEST_CASE("pipeline is deterministic and different algorithms differ") {
    long long t = 0;
    Graph snap = load_snapshot(data_path("net50.snap"), t);
    auto grp = grp14();
    auto a1 = pipeline_encrypt(snap, t, grp, 'A', 7);
    auto a2 = pipeline_encrypt(snap, t, grp, 'A', 7);
    CHECK(a1.emission.rendered() == a2.emission.rendered());
    CHECK(network_invariant_failures(a1.net).empty());

    auto c = pipeline_encrypt(snap, t, grp, 'C', 7);
    CHECK(network_invariant_failures(c.net).empty());
    CHECK(is_spanning_tree(snap, a1.tree));
    CHECK(is_spanning_tree(snap, c.tree));
    bool same_tree = true;
    for (int e = 0; e < a1.tree.edge_count() && same_tree; ++e) {
        const Edge& ed = a1.tree.edge(e);
        if (!c.tree.has_edge(ed.u, ed.v)) same_tree = false;
    }
    CHECK(!same_tree);

    auto s1 = pipeline_encrypt(snap, t, grp, 'A', 8);
    CHECK(s1.emission.rendered() != a1.emission.rendered());
}

TEST_CASE("self similar growth and nesting") {
    Graph h = path_graph(4);  // four vertices, three edges: seven blocks per parent
    Labelling f;
    f.vertex = {{0, 0}, {1, 3}, {2, 1}, {3, 2}};
    f.edge = {{0, 3}, {1, 2}, {2, 1}};
    auto grp = build_group(h, f, 7);
    auto series = self_similar_generate(h, f, grp, 3);
    REQUIRE(series.generations.size() == 3);
    std::size_t prev = 1;
    for (auto& gen : series.generations) {
        CHECK(gen.blocks.size() == prev * 7);
        prev = gen.blocks.size();
    }
    // join ids persist: every join of one generation appears in the next
    for (std::size_t i = 0; i + 1 < series.generations.size(); ++i) {
        std::set<int> next_ids;
        for (auto& j : series.generations[i + 1].joins) next_ids.insert(j.id);
        for (auto& j : series.generations[i].joins) CHECK(next_ids.count(j.id));
        CHECK(series.generations[i].joins.size() < series.generations[i + 1].joins.size());
    }
    CHECK_THROWS_AS(self_similar_generate(h, f, grp, 0), Error);
}

TEST_CASE("derived network group passes the axioms") {
    Graph host = path_graph(3);
    auto grp = grp14();
    std::vector<int> seq{2, 4};  // gives vertex indices 1, 2, 3
    auto gl = tree_group_coloring(host, grp, seq, 1, 0);
    REQUIRE(gl.proper_labelling);
    auto net = encrypt_network(host, grp, gl, smallest_vertex_join());
    auto ng = derived_group_from_network(net);
    CHECK(ng.n == grp.n);
    CHECK(network_group_axiom_failures(ng).empty());
    auto e2 = ng.element(2);
    CHECK(e2.zero == 2);
    CHECK(e2.vertex_index.at(0) == 2);
    CHECK(ng.add(5, 9, 3) == 11);
}

TEST_CASE("network dump lists blocks and joins") {
    EncryptedNetwork net = sample_net(path_graph(3));
    std::stringstream ss;
    write_network(ss, net);
    std::string dump = ss.str();
    CHECK(dump.find("group n 14") != std::string::npos);
    CHECK(dump.find("join") != std::string::npos);
}

}  // TEST_SUITE
