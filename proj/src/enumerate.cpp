#include "topsnut/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "topsnut/error.hpp"

namespace topsnut {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// Iterated neighborhood refinement. Equal graphs get equal color vectors;
// unequal colors prove non-isomorphism, ties go to the backtracking check.
std::vector<std::uint64_t> refinement_colors(const Graph& g, int rounds = 3) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> color(n);
    for (VertexId v = 0; v < n; ++v) color[v] = static_cast<std::uint64_t>(g.degree(v));
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::uint64_t> next(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<std::uint64_t> around;
            for (VertexId w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            std::uint64_t h = mix(0x517cc1b727220a95ULL, color[v]);
            for (std::uint64_t c : around) h = mix(h, c);
            next[v] = h;
        }
        color = std::move(next);
    }
    return color;
}

std::uint64_t invariant_key(const Graph& g, const std::vector<std::uint64_t>& color) {
    std::vector<std::uint64_t> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = mix(mix(0, g.vertex_count()), g.edge_count());
    for (std::uint64_t c : sorted) h = mix(h, c);
    auto comp = g.component_ids();
    std::vector<int> sizes(g.component_count(), 0);
    for (int c : comp) ++sizes[c];
    std::sort(sizes.begin(), sizes.end());
    for (int s : sizes) h = mix(h, static_cast<std::uint64_t>(s));
    return h;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<std::uint64_t>& ca,
                    const std::vector<std::uint64_t>& cb, std::vector<int>& map_ab,
                    std::vector<bool>& used_b, int v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
        if (used_b[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (VertexId prev = 0; prev < v && ok; ++prev)
            if (a.has_edge(prev, v) != b.has_edge(map_ab[prev], w)) ok = false;
        if (!ok) continue;
        map_ab[v] = w;
        used_b[w] = true;
        if (extend_mapping(a, b, ca, cb, map_ab, used_b, v + 1)) return true;
        used_b[w] = false;
    }
    return false;
}

// Candidate pool keyed by the refinement invariant; exact isomorphism decides.
class IsoSet {
   public:
    bool insert(const Graph& g) {
        auto color = refinement_colors(g);
        std::uint64_t key = invariant_key(g, color);
        auto& bucket = buckets_[key];
        for (int idx : bucket)
            if (graphs_isomorphic(g, graphs_[idx])) return false;
        bucket.push_back(static_cast<int>(graphs_.size()));
        graphs_.push_back(g);
        return true;
    }
    std::vector<Graph> take() { return std::move(graphs_); }

   private:
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
    std::vector<Graph> graphs_;
};

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto ca = refinement_colors(a);
    auto cb = refinement_colors(b);
    std::vector<std::uint64_t> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map_ab(a.vertex_count(), -1);
    std::vector<bool> used_b(a.vertex_count(), false);
    return extend_mapping(a, b, ca, cb, map_ab, used_b, 0);
}

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8) fail("SizeLimitExceeded", "graph enumeration supports 1..8 vertices");
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        IsoSet next;
        for (const Graph& parent : level) {
            for (std::uint32_t mask = 0; mask < (1U << (size - 1)); ++mask) {
                Graph child = parent;
                VertexId fresh = child.add_vertex();
                for (int v = 0; v < size - 1; ++v)
                    if ((mask >> v) & 1) child.add_edge(v, fresh);
                next.insert(child);
            }
        }
        level = next.take();
    }
    return level;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (g.connected()) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > 12) fail("SizeLimitExceeded", "tree enumeration supports 1..12 vertices");
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        IsoSet next;
        for (const Graph& parent : level) {
            for (VertexId anchor = 0; anchor < size - 1; ++anchor) {
                Graph child = parent;
                VertexId leaf = child.add_vertex();
                child.add_edge(anchor, leaf);
                next.insert(child);
            }
        }
        level = next.take();
    }
    return level;
}

}  // namespace topsnut
