#include "topsnut/euler.hpp"

#include <algorithm>
#include <list>

namespace topsnut {

namespace {

// multigraph edge pool shared by both decompositions
struct Pool {
    std::vector<Edge> edges;
    std::vector<bool> used;

    int pick(VertexId v) const {  // smallest unused edge at v, -1 if none
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (!used[i] && edges[i].touches(v)) return i;
        return -1;
    }
    int first_unused() const {
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (!used[i]) return i;
        return -1;
    }
};

// walk from the first unused edge until a vertex repeats; the loop between
// the repetitions is a cycle, the approach prefix goes back to the pool
std::vector<VertexId> peel_cycle(Pool& pool) {
    int e0 = pool.first_unused();
    std::vector<VertexId> walk{pool.edges[e0].u};
    std::vector<int> walked;
    VertexId cur = walk.back();
    while (true) {
        int ei = pool.pick(cur);
        pool.used[ei] = true;
        walked.push_back(ei);
        cur = pool.edges[ei].other(cur);
        auto hit = std::find(walk.begin(), walk.end(), cur);
        if (hit != walk.end()) {
            std::size_t at = static_cast<std::size_t>(hit - walk.begin());
            std::vector<VertexId> cyc(walk.begin() + at, walk.end());
            for (std::size_t i = 0; i < at; ++i) pool.used[walked[i]] = false;
            return cyc;
        }
        walk.push_back(cur);
    }
}

struct Step {
    VertexId entered;  // vertex reached by this step
    int edge;
};

// closed trail through every edge, as steps leaving `start`
std::vector<Step> closed_trail(Pool& pool, VertexId start) {
    std::list<Step> tour{{start, -1}};
    while (true) {
        auto it = tour.begin();
        for (; it != tour.end(); ++it)
            if (pool.pick(it->entered) != -1) break;
        if (it == tour.end()) break;
        VertexId cur = it->entered;
        auto insert_before = std::next(it);
        while (true) {
            int ei = pool.pick(cur);
            if (ei == -1) break;
            pool.used[ei] = true;
            cur = pool.edges[ei].other(cur);
            tour.insert(insert_before, {cur, ei});
        }
    }
    std::vector<Step> out;
    for (const Step& s : tour)
        if (s.edge != -1) out.push_back(s);
    return out;
}

}  // namespace

std::vector<std::vector<VertexId>> euler_cycle_decomposition(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 1) fail("OddDegreeVertex", "vertex " + std::to_string(v));
    Pool pool{g.edges(), std::vector<bool>(g.edges().size(), false)};
    std::vector<std::vector<VertexId>> cycles;
    while (pool.first_unused() != -1) cycles.push_back(peel_cycle(pool));
    return cycles;
}

std::vector<std::vector<VertexId>> non_euler_path_decomposition(const Graph& g) {
    if (!g.connected()) fail("Disconnected", "need a connected graph");
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 1) odd.push_back(v);
    if (odd.empty()) fail("AlreadyEulerian", "no odd-degree vertices; use the cycle decomposition");

    Pool pool{g.edges(), {}};
    int real_edges = static_cast<int>(pool.edges.size());
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2)
        pool.edges.push_back({odd[i], odd[i + 1]});  // virtual pairing edges
    pool.used.assign(pool.edges.size(), false);

    auto tour = closed_trail(pool, odd[0]);

    // open the closed tour at a virtual edge, then cut at the remaining ones;
    // virtual edges are vertex-disjoint, so no segment comes out empty
    auto is_virtual = [&](const Step& s) { return s.edge >= real_edges; };
    std::rotate(tour.begin(), std::find_if(tour.begin(), tour.end(), is_virtual), tour.end());

    std::vector<std::vector<VertexId>> paths;
    for (const Step& s : tour) {
        if (is_virtual(s)) {
            paths.emplace_back();
        } else {
            if (paths.back().empty())
                paths.back().push_back(pool.edges[s.edge].other(s.entered));
            paths.back().push_back(s.entered);
        }
    }
    return paths;
}

}  // namespace topsnut
