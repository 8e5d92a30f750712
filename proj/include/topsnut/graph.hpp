#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topsnut/error.hpp"

namespace topsnut {

using VertexId = int;

struct Edge {
    VertexId u, v;
    bool touches(VertexId x) const { return u == x || v == x; }
    VertexId other(VertexId x) const { return u == x ? v : u; }
    // unordered equality
    bool same(VertexId a, VertexId b) const {
        return (u == a && v == b) || (u == b && v == a);
    }
};

class Lcg;

// Simple undirected graph with stable insertion-order edges. Vertex ids are
// 0..n-1; every deterministic output downstream leans on the edge order, so
// nothing here ever reorders edges.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}

    int add_vertex() { return n_++; }
    void add_edge(VertexId u, VertexId v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
    bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v).has_value(); }
    std::optional<int> edge_index(VertexId u, VertexId v) const;

    std::vector<VertexId> neighbors(VertexId v) const;  // ascending
    int degree(VertexId v) const;
    int max_degree() const;
    int min_degree() const;

    std::vector<int> component_ids() const;  // vertex -> component index
    int component_count() const;
    bool connected() const;
    bool is_tree() const;
    std::vector<VertexId> leaves() const;  // degree-1 vertices, ascending

    // (X, Y) with X containing vertex 0 of each component; nullopt if odd cycle
    std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> bipartition() const;

    Graph without_vertices(const std::vector<VertexId>& drop) const;  // survivors renumbered in order

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// --- file format: line "p q", then q lines "u v"; '#' comments and blanks ok
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// --- generators
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph star_graph(int leaves);
// spine plus leaf_counts[i] pendant vertices on spine vertex i
Graph caterpillar_graph(const std::vector<int>& leaf_counts);
// body vertex 0, direct leaves, then legs given by their lengths (>= 2)
Graph spider_graph(int direct_leaves, const std::vector<int>& leg_lengths);
Graph random_tree(int n, Lcg& rng);                      // Pruefer decode
Graph preferential_attachment(int n, int m, Lcg& rng);   // m edges per new vertex
// two 6-cliques joined by the five-bridge pattern used as the worked
// connectivity example: a1b1, a1b2, a2b3, a3b4, a4b5
Graph bridged_cliques();

// --- tree classification
enum class TreeKind { path, caterpillar, lobster, spider, general_tree, non_tree };

struct TreeClass {
    TreeKind kind;
    // iterated leaf-deletion chain: witness[0] = input vertex count,
    // then the vertex count after each round of deleting all leaves
    std::vector<int> witness;
};

std::string to_string(TreeKind k);
Graph delete_leaves(const Graph& g);
TreeClass classify_tree(const Graph& g);
bool leaf_identity_check(const Graph& t);  // n1 == 2 + sum_{d>=3} (d-2) n_d

// --- split / coincide
struct SplitResult {
    Graph graph;
    std::map<VertexId, VertexId> provenance;  // new vertex -> original
};

SplitResult vertex_split(const Graph& g, VertexId v,
                         const std::vector<VertexId>& side_a,
                         const std::vector<VertexId>& side_b);
Graph vertex_coincide(const Graph& g, VertexId x, VertexId y);
SplitResult edge_split(const Graph& g, VertexId u, VertexId v);
Graph edge_coincide(const Graph& g, VertexId x, VertexId y, VertexId u, VertexId v);

}  // namespace topsnut
