#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "topsnut/graph.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/setlabelling.hpp"

namespace topsnut {

// A cell holds one value for plain labellings, several for set-valued ones.
// Rendering concatenates the values in ascending order.
using Cell = std::vector<int>;

// Three rows of q columns: upper endpoints, edge labels, lower endpoints.
struct TopsnutMatrix {
    std::vector<Cell> X, W, Y;
    int cols() const { return (int)W.size(); }
    bool operator==(const TopsnutMatrix& o) const {
        return X == o.X && W == o.W && Y == o.Y;
    }
};

// Default column order sorts edges by label; the smaller endpoint label
// goes in X. flip is indexed by edge and swaps that edge's endpoints.
TopsnutMatrix matrix_from_graph(const Graph& g, const Labelling& L);
TopsnutMatrix matrix_from_graph(const Graph& g, const Labelling& L,
                                const std::vector<int>& edge_order,
                                const std::vector<char>& flip);

// Set-valued variant; W carries the representatives. Default order follows
// the representative values, smaller endpoint id in X.
TopsnutMatrix matrix_from_sets(const Graph& g, const SetLabelling& SL);
TopsnutMatrix matrix_from_sets(const Graph& g, const SetLabelling& SL,
                               const std::vector<int>& edge_order,
                               const std::vector<char>& flip);

TopsnutMatrix reciprocal(const TopsnutMatrix& A);
void column_exchange(TopsnutMatrix& A, int i, int j);
void xy_exchange(TopsnutMatrix& A, int i);

// Column-block concatenation and its one-sided inverse. decompose removes
// one matching column per column of `part`, keeping the rest in order.
TopsnutMatrix compose(const TopsnutMatrix& a, const TopsnutMatrix& b);
TopsnutMatrix decompose(const TopsnutMatrix& whole, const TopsnutMatrix& part);

// Routes: rows, cols, zigzag, each with a -rev twin that walks the
// reciprocal matrix, and perm:<comma-separated cell indices> over the
// row-major cell numbering 0..3q-1. zigzag needs an even column count.
std::vector<std::pair<int, int>> route_cells(const std::string& route, int q);
std::string extract_tbpaw(const TopsnutMatrix& A, const std::string& route);

// All column orders times all endpoint orientations.
std::vector<TopsnutMatrix> all_matrices(const Graph& g, const Labelling& L);

// Shift family: member i adds i-1 to every X and Y value mod n; W never moves.
std::vector<TopsnutMatrix> matrix_group(const TopsnutMatrix& A, int n);
std::string tbpaw_group(const TopsnutMatrix& A, int n, const std::string& route);

void write_matrix(std::ostream& os, const TopsnutMatrix& A);
TopsnutMatrix read_matrix(std::istream& is);
TopsnutMatrix load_matrix(const std::string& path);
void save_matrix(const TopsnutMatrix& A, const std::string& path);

}  // namespace topsnut
