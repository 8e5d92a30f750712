#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "topsnut/emit.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

using namespace topsnut;

namespace {

struct Loaded {
    Graph g;
    Labelling L;
};

Loaded load(const std::string& base) {
    Loaded out;
    out.g = read_graph_file(data_path(base + ".g"));
    Scheme sch;
    out.L = load_labelling(data_path(base + ".lab"), out.g, sch);
    return out;
}

}  // namespace

TEST_SUITE("emit") {

TEST_CASE("path strings") {
    auto [g, L] = load("path5");
    CHECK(render(emit_vv_path(g, L)) == "037102512");
    CHECK(render(emit_vev_path(g, L)) == "03737271015251312");
}

TEST_CASE("explicit walks agree with the path sweep") {
    auto [g, L] = load("path5");
    std::vector<VertexId> fwd{0, 1, 2, 3, 4};
    CHECK(render(emit_vv_walk(g, L, fwd)) == "037102512");
    CHECK(render(emit_vev_walk(g, L, fwd)) == "03737271015251312");
    CHECK_THROWS_AS(emit_vv_walk(g, L, {0, 2}), Error);
    CHECK_THROWS_AS(emit_vv_walk(g, L, {}), Error);
    CHECK_THROWS_AS(emit_vv_walk(g, L, {0, 9}), Error);
}

TEST_CASE("caterpillar neighbor sweeps") {
    auto [g, L] = load("cat25");
    CHECK(render(emit_vv_neighbor(g, L, Sweep::up)) ==
          "03739414345470372468103710252729313335102510122512131517192123");
    CHECK(render(emit_vv_neighbor(g, L, Sweep::down)) ==
          "04745434139370371086423710353331292725102512102512232119171513");
    CHECK(render(emit_vev_neighbor(g, L, Sweep::up)) ==
          "037373939414143434545474703735233431629827103710152517271929213123332535102515"
          "10131225121133155177199211123");
}

TEST_CASE("cycle emission") {
    auto [g, L] = load("cycle8");
    CHECK(render(emit_vev_cycle(g, L)) == "03325164257617880");
    TbPaw vv = emit_vv_cycle(g, L);
    REQUIRE(vv.size() == 9);
    CHECK(vv.front() == vv.back());
}

TEST_CASE("sun rotations are distinct") {
    Graph g = cycle_graph(4);
    std::vector<int> leaves = {1, 2, 1, 2};
    std::map<VertexId, int> spine_label = {{0, 0}, {1, 2}, {2, 4}, {3, 6}};
    Labelling L;
    int next = 10;
    for (auto [v, lab] : spine_label) L.vertex[v] = lab;
    for (int s = 0; s < 4; ++s)
        for (int i = 0; i < leaves[s]; ++i) {
            VertexId fresh = g.add_vertex();
            g.add_edge(s, fresh);
            L.vertex[fresh] = next++;
        }
    fill_difference_edges(g, L);
    std::set<std::string> seen;
    for (int r = 0; r < 4; ++r) seen.insert(render(emit_vv_sun(g, L, Sweep::up, r)));
    CHECK(seen.size() == 4);
    CHECK(render(emit_vv_sun(g, L, Sweep::up, 0)) != render(emit_vv_sun(g, L, Sweep::down, 0)));
}

TEST_CASE("spider emission is deterministic and starts at the body") {
    Graph g = spider_graph(2, {2, 3});
    Labelling L;
    for (VertexId v = 0; v < g.vertex_count(); ++v) L.vertex[v] = 10 + v;
    fill_difference_edges(g, L);
    std::string a = render(emit_vv_spider(g, L, Sweep::up));
    CHECK(a == render(emit_vv_spider(g, L, Sweep::up)));
    CHECK(a.rfind("10", 0) == 0);
    CHECK(render(emit_vev_spider(g, L, Sweep::up)) != a);
}

TEST_CASE("hub tour over the multiple meaning labellings") {
    auto [g, L] = load("lobster12");
    auto all = multiple_meaning_emit(g, L);
    REQUIRE(all.size() == 5);
    CHECK(render(all[0]) == "295110101286772685349231114210");
    CHECK(render(all[1]) == "220522021121961872178163159214111241310");
    CHECK(render(all[2]) == "27550612869721080319221144310");
    CHECK(render(all[3]) == "235102124657268738929111141010");
    CHECK(render(all[4]) == "2175210191215613721189379251114310");
}

TEST_CASE("meaning rules satisfy their stated forms") {
    auto [g, L] = load("lobster12");
    auto labs = multiple_meaning_labellings(g, L);
    REQUIRE(labs.size() == 5);
    for (int e = 0; e < g.edge_count(); ++e) {
        int s = L.vertex.at(g.edge(e).u) + L.vertex.at(g.edge(e).v);
        CHECK(labs[0].edge.at(e) == 16 - s);
        CHECK(labs[1].edge.at(e) == 27 - s);
        CHECK(labs[2].edge.at(e) == s % 11);
        CHECK(labs[3].edge.at(e) == s - 4);
        CHECK(labs[4].edge.at(e) % 2 == 1);
    }
}

TEST_CASE("meaning rejects a non bijective vertex labelling") {
    Graph g = path_graph(3);
    Labelling L;
    L.vertex = {{0, 0}, {1, 5}, {2, 1}};
    CHECK_THROWS_AS(multiple_meaning_labellings(g, L), Error);
}

TEST_CASE("euler emission covers every edge") {
    auto [g, L] = load("cycle8");
    TbPaw d = emit_vev_euler(g, L);
    REQUIRE(d.size() == 17);
    std::multiset<int> edges;
    for (std::size_t i = 1; i < d.size(); i += 2) edges.insert(d[i].value());
    std::multiset<int> want;
    for (auto& [e, val] : L.edge) want.insert(val);
    CHECK(edges == want);
}

TEST_CASE("shape guards") {
    auto [g, L] = load("cycle8");
    CHECK_THROWS_AS(emit_vv_path(g, L), Error);
    auto p = load("path5");
    CHECK_THROWS_AS(emit_vev_cycle(p.g, p.L), Error);
}

}  // TEST_SUITE
