#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"

using namespace topsnut;

namespace {

TopsnutMatrix cycle8_matrix() {
    Graph g = read_graph_file(data_path("cycle8.g"));
    Scheme sch;
    Labelling L = load_labelling(data_path("cycle8.lab"), g, sch);
    return matrix_from_graph(g, L);
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("columns sort by edge label, endpoints ordered") {
    TopsnutMatrix A = cycle8_matrix();
    REQUIRE(A.cols() == 8);
    for (int c = 0; c < 8; ++c) {
        CHECK(A.W[c] == Cell{c + 1});
        CHECK(A.X[c].front() <= A.Y[c].front());
    }
}

TEST_CASE("route cells cover the matrix") {
    for (const char* route : {"rows", "cols", "zigzag"}) {
        auto cells = route_cells(route, 8);
        CHECK(cells.size() == 24);
        std::set<std::pair<int, int>> uniq(cells.begin(), cells.end());
        CHECK(uniq.size() == 24);
    }
    CHECK_THROWS_AS(route_cells("zigzag", 7), Error);
    CHECK_THROWS_AS(route_cells("sideways", 4), Error);
}

TEST_CASE("permutation route matches the serpentine when spelled out") {
    int q = 4;
    std::ostringstream os;
    os << "perm:";
    bool first = true;
    auto emit = [&](int idx) {
        os << (first ? "" : ",") << idx;
        first = false;
    };
    for (int c = 0; c < q; ++c) emit(c);
    for (int c = q - 1; c >= 0; --c) emit(q + c);
    for (int c = 0; c < q; ++c) emit(2 * q + c);
    CHECK(route_cells(os.str(), q) == route_cells("rows", q));
}

TEST_CASE("reversed route reads the reciprocal") {
    TopsnutMatrix A = cycle8_matrix();
    CHECK(extract_tbpaw(A, "rows-rev") == extract_tbpaw(reciprocal(A), "rows"));
    CHECK(extract_tbpaw(A, "rows") != extract_tbpaw(A, "rows-rev"));
}

TEST_CASE("cell operations are involutions") {
    TopsnutMatrix A = cycle8_matrix();
    TopsnutMatrix B = reciprocal(reciprocal(A));
    CHECK(B == A);
    TopsnutMatrix C = A;
    xy_exchange(C, 2);
    CHECK(!(C == A));
    xy_exchange(C, 2);
    CHECK(C == A);
    column_exchange(C, 1, 5);
    column_exchange(C, 1, 5);
    CHECK(C == A);
}

TEST_CASE("matrix census size") {
    Graph g = path_graph(4);
    Labelling L;
    L.vertex = {{0, 0}, {1, 3}, {2, 1}, {3, 2}};
    fill_difference_edges(g, L);
    auto all = all_matrices(g, L);
    CHECK((int)all.size() == 6 * 8);  // q! * 2^q at q = 3
    std::set<std::string> strings;
    for (const auto& M : all) strings.insert(extract_tbpaw(M, "rows"));
    CHECK(strings.size() > 1);
    CHECK(strings.size() <= all.size());
}

TEST_CASE("matrix group shares the W row") {
    TopsnutMatrix A = cycle8_matrix();
    auto grp = matrix_group(A, 9);
    REQUIRE((int)grp.size() == 9);
    for (const auto& M : grp) CHECK(M.W == A.W);
    // the shift acts on X and Y cells alone, index 1 is the original
    CHECK(grp[0] == A);
}

TEST_CASE("group string concatenates the member strings") {
    TopsnutMatrix A = cycle8_matrix();
    std::string all = tbpaw_group(A, 5, "rows");
    std::string manual;
    for (const auto& M : matrix_group(A, 5)) manual += extract_tbpaw(M, "rows");
    CHECK(all == manual);
}

TEST_CASE("compose and decompose invert each other") {
    TopsnutMatrix A = cycle8_matrix();
    TopsnutMatrix left, right;
    left.X.assign(A.X.begin(), A.X.begin() + 3);
    left.W.assign(A.W.begin(), A.W.begin() + 3);
    left.Y.assign(A.Y.begin(), A.Y.begin() + 3);
    right.X.assign(A.X.begin() + 3, A.X.end());
    right.W.assign(A.W.begin() + 3, A.W.end());
    right.Y.assign(A.Y.begin() + 3, A.Y.end());
    CHECK(compose(left, right) == A);
    CHECK(decompose(A, left) == right);
    TopsnutMatrix stranger = left;
    stranger.W[0] = Cell{99};
    CHECK_THROWS_AS(decompose(A, stranger), Error);
}

TEST_CASE("matrix file round trip") {
    TopsnutMatrix A = cycle8_matrix();
    std::stringstream ss;
    write_matrix(ss, A);
    TopsnutMatrix B = read_matrix(ss);
    CHECK(B == A);
}

}  // TEST_SUITE
