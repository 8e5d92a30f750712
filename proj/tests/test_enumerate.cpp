#include <doctest.h>

#include "topsnut/enumerate.hpp"
#include "topsnut/graph.hpp"

using namespace topsnut;

TEST_SUITE("enumerate") {

TEST_CASE("unlabelled graph counts") {
    const int want[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) CHECK((int)all_graphs(n).size() == want[n]);
}

TEST_CASE("connected graph counts") {
    const int want[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK((int)connected_graphs(n).size() == want[n]);
}

TEST_CASE("tree counts and shape") {
    const int want[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto ts = all_trees(n);
        CHECK((int)ts.size() == want[n]);
        for (const Graph& t : ts) {
            CHECK(t.vertex_count() == n);
            CHECK(t.is_tree());
        }
    }
}

TEST_CASE("enumerated trees are pairwise distinct") {
    auto ts = all_trees(7);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            CHECK(!graphs_isomorphic(ts[i], ts[j]));
}

TEST_CASE("isomorphism testing") {
    CHECK(!graphs_isomorphic(path_graph(4), star_graph(3)));

    Graph a = path_graph(4);
    Graph b(4);  // the same path with ids scrambled
    b.add_edge(2, 0);
    b.add_edge(0, 3);
    b.add_edge(3, 1);
    CHECK(graphs_isomorphic(a, b));

    CHECK(!graphs_isomorphic(cycle_graph(6), complete_bipartite(2, 4)));
    CHECK(graphs_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
}

}  // TEST_SUITE
