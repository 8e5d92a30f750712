#include <doctest.h>

#include <sstream>

#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/rng.hpp"

using namespace topsnut;

TEST_SUITE("graph") {

TEST_CASE("file format round trip") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 4);
    g.add_edge(2, 3);
    std::stringstream ss;
    write_graph(ss, g);
    Graph h = read_graph(ss);
    CHECK(h.vertex_count() == 5);
    REQUIRE(h.edge_count() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(h.edge(i).u == g.edge(i).u);
        CHECK(h.edge(i).v == g.edge(i).v);
    }
}

TEST_CASE("comments and blanks are skipped") {
    std::stringstream ss("# head\n\n3 2\n0 1\n1 2 # tail\n");
    Graph g = read_graph(ss);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("neighbors come back ascending") {
    Graph g(5);
    g.add_edge(2, 4);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    CHECK(g.neighbors(2) == std::vector<VertexId>{0, 3, 4});
    CHECK(g.edge_index(4, 2).has_value());
    CHECK(!g.edge_index(0, 1).has_value());
}

TEST_CASE("tree classification") {
    CHECK(classify_tree(path_graph(6)).kind == TreeKind::path);
    CHECK(classify_tree(caterpillar_graph({2, 0, 3})).kind == TreeKind::caterpillar);
    CHECK(classify_tree(cycle_graph(5)).kind == TreeKind::non_tree);
    // short-legged spiders still peel to a path in one round
    CHECK(classify_tree(spider_graph(2, {2, 3})).kind == TreeKind::caterpillar);
    CHECK(classify_tree(spider_graph(0, {3, 3, 3})).kind == TreeKind::spider);

    // two hubs, two length-2 legs each: one peel leaves a star, two leave a path
    Graph lob(2);
    lob.add_edge(0, 1);
    for (VertexId hub : {0, 1})
        for (int leg = 0; leg < 2; ++leg) {
            VertexId mid = lob.add_vertex();
            lob.add_edge(hub, mid);
            lob.add_edge(mid, lob.add_vertex());
        }
    CHECK(classify_tree(lob).kind == TreeKind::lobster);
}

TEST_CASE("leaf deletion chain shrinks") {
    Graph cat = caterpillar_graph({1, 2, 1});
    auto cls = classify_tree(cat);
    REQUIRE(cls.witness.size() >= 2);
    CHECK(cls.witness[0] == cat.vertex_count());
    CHECK(cls.witness[1] < cls.witness[0]);
    CHECK(delete_leaves(star_graph(4)).vertex_count() == 1);
}

TEST_CASE("leaf identity holds on random trees") {
    Lcg rng(11);
    for (int i = 0; i < 50; ++i) CHECK(leaf_identity_check(random_tree(2 + rng.below(10), rng)));
}

TEST_CASE("bipartition") {
    CHECK(!cycle_graph(5).bipartition().has_value());
    auto sides = cycle_graph(6).bipartition();
    REQUIRE(sides.has_value());
    CHECK(sides->first.size() == 3);
    auto kb = complete_bipartite(2, 3).bipartition();
    REQUIRE(kb.has_value());
    CHECK(kb->first.size() + kb->second.size() == 5);
}

TEST_CASE("worked connectivity example shape") {
    Graph g = bridged_cliques();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 35);
    CHECK(g.connected());
    CHECK(g.min_degree() == 5);
}

TEST_CASE("generators stay connected") {
    Lcg rng(3);
    Graph pa = preferential_attachment(50, 2, rng);
    CHECK(pa.vertex_count() == 50);
    CHECK(pa.connected());
    CHECK(random_tree(10, rng).is_tree());
}

TEST_CASE("without_vertices renumbers the survivors") {
    Graph p = path_graph(4);
    Graph cut = p.without_vertices({1});
    CHECK(cut.vertex_count() == 3);
    CHECK(cut.edge_count() == 1);
    CHECK(cut.has_edge(1, 2));  // old 2-3 slides down
    CHECK_THROWS_AS(p.without_vertices({9}), Error);
}

TEST_CASE("duplicate edges are rejected") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
}

}  // TEST_SUITE
