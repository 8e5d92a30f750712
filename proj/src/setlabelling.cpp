#include "topsnut/setlabelling.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "topsnut/error.hpp"

namespace topsnut {
namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

struct PeelStep {
    VertexId leaf;
    VertexId neighbor;
    int edge;
};

// Peels the smallest-id leaf until one vertex remains. Result is in peel
// order; rebuilding walks it backwards.
std::vector<PeelStep> peel_order(const Graph& t) {
    if (!t.is_tree()) fail("NotATree", "set labelling needs a tree");
    const int p = t.vertex_count();
    std::vector<int> deg(p);
    std::vector<char> gone(p, 0);
    for (VertexId v = 0; v < p; ++v) deg[v] = t.degree(v);
    std::vector<PeelStep> steps;
    for (int round = 0; round + 1 < p; ++round) {
        VertexId leaf = -1;
        for (VertexId v = 0; v < p; ++v) {
            if (!gone[v] && deg[v] == 1) { leaf = v; break; }
        }
        VertexId nb = -1;
        int ei = -1;
        for (VertexId u : t.neighbors(leaf)) {
            if (!gone[u]) {
                nb = u;
                ei = *t.edge_index(leaf, u);
                break;
            }
        }
        steps.push_back({leaf, nb, ei});
        gone[leaf] = 1;
        --deg[nb];
    }
    return steps;
}

}  // namespace

SetLabelling intersection_set_labelling(const Graph& t, bool odd) {
    auto steps = peel_order(t);
    SetLabelling out;
    for (VertexId v = 0; v < t.vertex_count(); ++v) out.vertex_sets[v] = {};
    int k = 0;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        ++k;
        const int rep = odd ? 2 * k - 1 : k;
        out.vertex_sets[it->leaf] = {rep};
        auto& nb = out.vertex_sets[it->neighbor];
        nb.insert(std::lower_bound(nb.begin(), nb.end(), rep), rep);
        out.representatives[it->edge] = rep;
    }
    for (const auto& e : t.edges()) {
        int ei = *t.edge_index(e.u, e.v);
        out.edge_sets[ei] = intersect(out.vertex_sets[e.u], out.vertex_sets[e.v]);
    }
    return out;
}

std::vector<long long> rainbow_lengths(const RainbowSpec& spec, int count) {
    std::vector<long long> L;
    switch (spec.kind) {
        case RainbowSpec::Kind::regular:
            for (int k = 1; k <= count; ++k) L.push_back(k);
            break;
        case RainbowSpec::Kind::odd:
            for (int k = 1; k <= count; ++k) L.push_back(2 * k - 1);
            break;
        case RainbowSpec::Kind::fibonacci:
            L = {1, 2};
            while ((int)L.size() < count) L.push_back(L[L.size() - 1] + L[L.size() - 2]);
            L.resize(std::max(count, 0));
            break;
        case RainbowSpec::Kind::tau_term: {
            if (spec.tau < 2) fail("BadSequenceParams", "tau must be at least 2");
            if ((int)spec.seeds.size() != spec.tau)
                fail("BadSequenceParams", "need exactly tau seed lengths");
            for (long long s : spec.seeds)
                if (s < 1) fail("BadSequenceParams", "seed lengths must be positive");
            L = spec.seeds;
            while ((int)L.size() < count) {
                long long s = 0;
                for (int i = 0; i < spec.tau; ++i) s += L[L.size() - spec.tau + i];
                L.push_back(s);
            }
            L.resize(std::max(count, 0));
            break;
        }
    }
    std::set<long long> seen(L.begin(), L.end());
    if ((int)seen.size() != (int)L.size())
        fail("BadSequenceParams", "interval lengths repeat; sets would collide");
    return L;
}

SetLabelling rainbow_set_labelling(const Graph& t, const RainbowSpec& spec) {
    auto lv = t.leaves();
    VertexId anchor = lv.empty() ? 0 : lv.front();
    return rainbow_set_labelling(t, spec, anchor);
}

SetLabelling rainbow_set_labelling(const Graph& t, const RainbowSpec& spec, VertexId anchor) {
    if (!t.is_tree()) fail("NotATree", "rainbow labelling needs a tree");
    if (!t.has_vertex(anchor)) fail("PlanTargetsUnknownVertex", "anchor vertex missing");
    const int p = t.vertex_count();
    if (p > 1) {
        if (t.degree(anchor) != 1) fail("PlanTargetsUnknownVertex", "anchor must be a leaf");
    }
    auto L = rainbow_lengths(spec, p);

    // BFS from the anchor; closer vertices get larger intervals, so each
    // vertex's set strictly contains every set beyond it.
    std::vector<int> order;
    std::vector<char> seen(p, 0);
    std::queue<VertexId> bfs;
    bfs.push(anchor);
    seen[anchor] = 1;
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        order.push_back(v);
        for (VertexId u : t.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                bfs.push(u);
            }
        }
    }

    SetLabelling out;
    for (int i = 0; i < p; ++i) {
        long long len = L[p - 1 - i];
        std::vector<int> iv(len);
        for (long long j = 0; j < len; ++j) iv[j] = (int)(j + 1);
        out.vertex_sets[order[i]] = std::move(iv);
    }
    for (const auto& e : t.edges()) {
        int ei = *t.edge_index(e.u, e.v);
        out.edge_sets[ei] = intersect(out.vertex_sets.at(e.u), out.vertex_sets.at(e.v));
    }
    return out;
}

VerificationReport verify_rainbow(const Graph& t, const SetLabelling& SL,
                                  const RainbowSpec& spec) {
    VerificationReport rep;
    if (!t.is_tree()) fail("NotATree", "rainbow labelling needs a tree");
    const int p = t.vertex_count();
    auto L = rainbow_lengths(spec, p);

    std::multiset<long long> want(L.begin(), L.end());
    std::multiset<long long> got;
    for (VertexId v = 0; v < p; ++v) {
        auto it = SL.vertex_sets.find(v);
        if (it == SL.vertex_sets.end()) fail("MissingLabel", "vertex " + std::to_string(v));
        const auto& s = it->second;
        // Family membership means the set IS an interval [1, L_k].
        for (size_t j = 0; j < s.size(); ++j) {
            if (s[j] != (int)(j + 1)) {
                rep.fail("interval-form", "vertex " + std::to_string(v) + " " + set_str(s));
                break;
            }
        }
        got.insert((long long)s.size());
    }
    if (got != want) rep.fail("family-cover", "vertex interval lengths do not match the family");

    bool shelled = true;
    for (const auto& e : t.edges()) {
        int ei = *t.edge_index(e.u, e.v);
        const auto& a = SL.vertex_sets.at(e.u);
        const auto& b = SL.vertex_sets.at(e.v);
        auto inter = intersect(a, b);
        auto it = SL.edge_sets.find(ei);
        if (it == SL.edge_sets.end()) fail("MissingLabel", "edge set absent");
        if (it->second != inter)
            rep.fail("edge-intersection", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (inter != a && inter != b) shelled = false;
    }
    // Edge sets coinciding with the smaller endpoint is a property of the
    // construction, not a requirement of the definition.
    rep.note("shelled", shelled ? 1 : 0);
    if (shelled && p > 1) {
        std::multiset<long long> ew(L.begin(), L.end() - 1);
        std::multiset<long long> eg;
        for (const auto& kv : SL.edge_sets) eg.insert((long long)kv.second.size());
        rep.note("edge_family_cover", ew == eg ? 1 : 0);
    }
    return rep;
}

namespace {

void need_vertex_sets(const Graph& g, const SetLabelling& SL) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!SL.vertex_sets.count(v)) fail("MissingLabel", "vertex " + std::to_string(v));
}

void need_edge_sets(const Graph& g, const SetLabelling& SL) {
    for (int ei = 0; ei < g.edge_count(); ++ei)
        if (!SL.edge_sets.count(ei)) fail("MissingLabel", "edge " + std::to_string(ei));
}

void check_distinct_sets(VerificationReport& rep, const std::vector<std::vector<int>>& sets,
                         const char* clause) {
    auto sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) {
            rep.fail(clause, "set " + set_str(sorted[i]) + " repeats");
            return;
        }
}

// Representative system: one member per edge intersection, covering `values`
// exactly. Kuhn's matching on value -> edge.
bool representative_system(const Graph& g, const SetLabelling& SL,
                           const std::vector<int>& values) {
    const int q = g.edge_count();
    if ((int)values.size() != q) return false;
    std::vector<std::vector<int>> can(q);
    for (int ei = 0; ei < q; ++ei) {
        const auto& e = g.edge(ei);
        auto inter = [&] {
            std::vector<int> out;
            const auto& a = SL.vertex_sets.at(e.u);
            const auto& b = SL.vertex_sets.at(e.v);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
            return out;
        }();
        for (int i = 0; i < q; ++i)
            if (std::binary_search(inter.begin(), inter.end(), values[i]))
                can[ei].push_back(i);
    }
    std::vector<int> match_edge(q, -1), match_val(q, -1);
    std::function<bool(int, std::vector<char>&)> aug = [&](int ei, std::vector<char>& used) {
        for (int vi : can[ei]) {
            if (used[vi]) continue;
            used[vi] = 1;
            if (match_val[vi] < 0 || aug(match_val[vi], used)) {
                match_val[vi] = ei;
                match_edge[ei] = vi;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int ei = 0; ei < q; ++ei) {
        std::vector<char> used(q, 0);
        if (aug(ei, used)) ++matched;
    }
    return matched == q;
}

void check_intersection_scheme(VerificationReport& rep, const Graph& g,
                               const SetLabelling& SL, bool odd) {
    need_vertex_sets(g, SL);
    const int q = g.edge_count();
    std::vector<int> values;
    for (int k = 1; k <= q; ++k) values.push_back(odd ? 2 * k - 1 : k);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& s = SL.vertex_sets.at(v);
        if (q > 0 && s.empty()) {
            rep.fail("nonempty", "vertex " + std::to_string(v) + " has the empty set");
            continue;
        }
        for (int x : s) {
            bool ok = odd ? (x >= 1 && x <= 2 * q - 1 && x % 2 == 1) : (x >= 1 && x <= q);
            if (!ok) {
                rep.fail("vertex-range", "vertex " + std::to_string(v) + " holds " +
                                             std::to_string(x));
                break;
            }
        }
    }
    for (const auto& e : g.edges()) {
        int ei = *g.edge_index(e.u, e.v);
        const auto& a = SL.vertex_sets.at(e.u);
        const auto& b = SL.vertex_sets.at(e.v);
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        if (inter.empty())
            rep.fail("edge-intersection",
                     "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " empty");
        auto it = SL.edge_sets.find(ei);
        if (it != SL.edge_sets.end() && it->second != inter)
            rep.fail("edge-intersection",
                     "edge set differs from endpoint intersection at " + std::to_string(ei));
    }
    if (!SL.representatives.empty()) {
        std::multiset<int> reps;
        for (int ei = 0; ei < q; ++ei) {
            auto it = SL.representatives.find(ei);
            if (it == SL.representatives.end()) fail("MissingLabel", "representative absent");
            const auto& e = g.edge(ei);
            const auto& a = SL.vertex_sets.at(e.u);
            const auto& b = SL.vertex_sets.at(e.v);
            if (!std::binary_search(a.begin(), a.end(), it->second) ||
                !std::binary_search(b.begin(), b.end(), it->second))
                rep.fail("representative-member",
                         std::to_string(it->second) + " outside the intersection");
            reps.insert(it->second);
        }
        if (reps != std::multiset<int>(values.begin(), values.end()))
            rep.fail("representative-cover", "representatives miss the target value set");
    } else if (!representative_system(g, SL, values)) {
        rep.fail("representative-cover", "no distinct-representative system exists");
    }
}

}  // namespace

VerificationReport verify_set(const Graph& g, const SetLabelling& SL, const Scheme& scheme) {
    VerificationReport rep;
    const std::string& name = scheme.name;
    if (name == "total-set-labelling") {
        need_vertex_sets(g, SL);
        need_edge_sets(g, SL);
        std::vector<std::vector<int>> all;
        for (const auto& kv : SL.vertex_sets) all.push_back(kv.second);
        for (const auto& kv : SL.edge_sets) all.push_back(kv.second);
        check_distinct_sets(rep, all, "distinct-sets");
    } else if (name == "vertex-set-labelling") {
        need_vertex_sets(g, SL);
        std::vector<std::vector<int>> all;
        for (const auto& kv : SL.vertex_sets) all.push_back(kv.second);
        check_distinct_sets(rep, all, "distinct-sets");
    } else if (name == "edge-set-labelling") {
        need_edge_sets(g, SL);
        std::vector<std::vector<int>> all;
        for (const auto& kv : SL.edge_sets) all.push_back(kv.second);
        check_distinct_sets(rep, all, "distinct-sets");
    } else if (name == "v-set-e-proper") {
        need_vertex_sets(g, SL);
        std::vector<std::vector<int>> all;
        for (const auto& kv : SL.vertex_sets) all.push_back(kv.second);
        check_distinct_sets(rep, all, "distinct-sets");
        for (int ei = 0; ei < g.edge_count(); ++ei)
            if (!SL.representatives.count(ei)) fail("MissingLabel", "edge value absent");
        std::set<int> ev;
        for (const auto& kv : SL.representatives) {
            if (!ev.insert(kv.second).second)
                rep.fail("proper-edges", "edge value " + std::to_string(kv.second) + " repeats");
        }
    } else if (name == "e-set-v-proper") {
        need_edge_sets(g, SL);
        std::vector<std::vector<int>> all;
        for (const auto& kv : SL.edge_sets) all.push_back(kv.second);
        check_distinct_sets(rep, all, "distinct-sets");
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!SL.vertex_values.count(v)) fail("MissingLabel", "vertex value absent");
        std::set<int> vv;
        for (const auto& kv : SL.vertex_values) {
            if (!vv.insert(kv.second).second)
                rep.fail("proper-vertices",
                         "vertex value " + std::to_string(kv.second) + " repeats");
        }
    } else if (name == "graceful-intersection") {
        check_intersection_scheme(rep, g, SL, false);
    } else if (name == "odd-graceful-intersection") {
        check_intersection_scheme(rep, g, SL, true);
    } else {
        fail("UnknownScheme", name);
    }
    return rep;
}

}  // namespace topsnut
