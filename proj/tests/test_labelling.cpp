#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "topsnut/construct.hpp"
#include "topsnut/enumerate.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"

using namespace topsnut;

namespace {

Labelling load(const std::string& g_name, const std::string& l_name, Graph& g, Scheme& sch) {
    g = read_graph_file(data_path(g_name));
    return load_labelling(data_path(l_name), g, sch);
}

}  // namespace

TEST_SUITE("labelling") {

TEST_CASE("file round trip keeps scheme params") {
    Graph g = path_graph(3);
    Labelling L;
    L.vertex = {{0, 0}, {1, 3}, {2, 1}};
    fill_difference_edges(g, L);
    Scheme sch;
    sch.name = "kd-graceful";
    sch.params["k"] = 2;
    sch.params["d"] = 3;
    std::stringstream ss;
    write_labelling(ss, g, L, sch);
    Scheme back;
    Labelling M = read_labelling(ss, g, back);
    CHECK(back.name == "kd-graceful");
    CHECK(back.param("k", 0) == 2);
    CHECK(back.param("d", 0) == 3);
    CHECK(M.vertex == L.vertex);
    CHECK(M.edge == L.edge);
}

TEST_CASE("dual is an involution") {
    Graph g;
    Scheme sch;
    Labelling L = load("cycle8.g", "cycle8.lab", g, sch);
    Labelling d = dual_labelling(L);
    CHECK(d.vertex != L.vertex);
    Labelling dd = dual_labelling(d);
    CHECK(dd.vertex == L.vertex);
    CHECK(dd.edge == L.edge);
}

TEST_CASE("corpus labellings pass their schemes") {
    Graph g;
    Scheme sch;
    Labelling L = load("cycle8.g", "cycle8.lab", g, sch);
    CHECK(verify(g, L, sch).violations.empty());

    Labelling cat = load("cat25.g", "cat25.lab", g, sch);
    CHECK(sch.name == "set-ordered-odd-graceful");
    CHECK(verify(g, cat, sch).violations.empty());
}

TEST_CASE("six condition facts") {
    Graph g;
    Scheme sch;
    Labelling L = load("tree13.g", "tree13.lab", g, sch);
    auto rep = verify(g, L, sch);
    CHECK(rep.violations.empty());
    CHECK(rep.facts.at("k") == 13);
    CHECK(rep.facts.at("k2") == 26);
    CHECK(rep.facts.at("kprime") == 0);
    CHECK(rep.facts.at("singularity") == 13);
}

TEST_CASE("a broken labelling is reported") {
    Graph g;
    Scheme sch;
    Labelling L = load("cycle8.g", "cycle8.lab", g, sch);
    L.vertex[0] = 4;  // collides and breaks the differences
    auto rep = verify(g, L, sch);
    CHECK(!rep.violations.empty());
}

TEST_CASE("caterpillar constructor passes verification on the small corpus") {
    Scheme graceful;
    graceful.name = "set-ordered-graceful";
    Scheme odd;
    odd.name = "set-ordered-odd-graceful";
    int seen = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& t : all_trees(n)) {
            auto kind = classify_tree(t).kind;
            if (kind != TreeKind::path && kind != TreeKind::caterpillar) continue;
            ++seen;
            Labelling f = construct_set_ordered_graceful_caterpillar(t);
            CHECK(verify(t, f, graceful).violations.empty());
            Labelling g2 = graceful_to_odd_graceful(t, f);
            CHECK(verify(t, g2, odd).violations.empty());
        }
    CHECK(seen > 10);
}

TEST_CASE("image labelling sums are constant") {
    Graph t = caterpillar_graph({2, 1, 3});
    int q = t.edge_count();
    Labelling f = construct_set_ordered_graceful_caterpillar(t);
    Labelling g = image_labelling(t, f);
    for (auto& [e, val] : f.edge) CHECK(val + g.edge.at(e) == q + 1);

    Labelling fo = graceful_to_odd_graceful(t, f);
    Labelling go = image_labelling_odd(t, fo);
    for (auto& [e, val] : fo.edge) CHECK(val + go.edge.at(e) == 2 * q);
}

TEST_CASE("derived equivalents pass their schemes") {
    Graph t = caterpillar_graph({1, 2, 1});
    Labelling f = construct_set_ordered_graceful_caterpillar(t);
    auto suite = equivalence_suite(t, f, 3, 2);
    CHECK(suite.size() >= 4);
    for (auto& [sch, lab] : suite) {
        auto rep = verify(t, lab, sch);
        INFO(sch.name);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("reciprocal inverse pair swaps label roles") {
    Graph t1 = caterpillar_graph({2, 2});
    Graph t2 = caterpillar_graph({1, 1, 1});
    REQUIRE(t1.vertex_count() == t2.vertex_count());
    int p = t1.vertex_count();
    auto f1 = construct_set_ordered_graceful_caterpillar(t1);
    auto f2 = construct_set_ordered_graceful_caterpillar(t2);
    auto [g1, h2] = reciprocal_inverse_pair(t1, f1, t2, f2);

    auto values = [](const Labelling& L) {
        std::vector<int> vals = L.vertex_values();
        for (int e : L.edge_values()) vals.push_back(e);
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    std::vector<int> all1 = values(g1), all2 = values(h2);
    // both cover [1, 2p-1]; vertex labels sit low in one and high in the other
    std::vector<int> want;
    for (int v = 1; v <= 2 * p - 1; ++v) want.push_back(v);
    CHECK(all1 == want);
    CHECK(all2 == want);
    std::vector<int> vv1 = g1.vertex_values(), vv2 = h2.vertex_values();
    int max_v1 = *std::max_element(vv1.begin(), vv1.end());
    int min_v2 = *std::min_element(vv2.begin(), vv2.end());
    CHECK(max_v1 == p);
    CHECK(min_v2 == p);
}

TEST_CASE("unknown scheme fails loudly") {
    Graph g = path_graph(3);
    Labelling L;
    L.vertex = {{0, 0}, {1, 2}, {2, 1}};
    fill_difference_edges(g, L);
    Scheme sch;
    sch.name = "no-such-scheme";
    CHECK_THROWS_AS(verify(g, L, sch), Error);
    CHECK(known_schemes().size() > 20);
}

}  // TEST_SUITE
