// Acceptance gate. Each criterion prints one PASS or FAIL line with its
// runtime; the exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "topsnut/connectivity.hpp"
#include "topsnut/construct.hpp"
#include "topsnut/counting.hpp"
#include "topsnut/emit.hpp"
#include "topsnut/enumerate.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/group.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"
#include "topsnut/netcrypt.hpp"
#include "topsnut/noise.hpp"
#include "topsnut/rng.hpp"
#include "topsnut/setlabelling.hpp"

using namespace topsnut;

namespace {

std::string data_path(const std::string& name) {
    const char* base = std::getenv("TOPSNUT_DATA");
    return (base ? std::string(base) : std::string("data")) + "/" + name;
}

using Problems = std::vector<std::string>;

void want(Problems& bad, bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
}

void want_str(Problems& bad, const std::string& what, const std::string& got,
              const std::string& expect) {
    if (got != expect) bad.push_back(what + ": got " + got + " expected " + expect);
}

template <class A, class B>
void want_eq(Problems& bad, const std::string& what, const A& got, const B& expect) {
    if (!(got == static_cast<A>(expect))) {
        std::ostringstream os;
        os << what << ": got " << got << " expected " << expect;
        bad.push_back(os.str());
    }
}

struct Loaded {
    Graph g;
    Labelling L;
    Scheme scheme;
};

Loaded load(const std::string& graph, const std::string& labels) {
    Loaded out;
    out.g = read_graph_file(data_path(graph));
    out.L = load_labelling(data_path(labels), out.g, out.scheme);
    return out;
}

// ---------------------------------------------------------------- criterion 1

void frozen_strings(Problems& bad) {
    Loaded q = load("path5.g", "path5.lab");
    want_str(bad, "vv path string", render(emit_vv_path(q.g, q.L)), "037102512");
    want_str(bad, "vev path string", render(emit_vev_path(q.g, q.L)), "03737271015251312");

    TopsnutMatrix A;
    A.X = {{5}, {5}, {0, 7}, {2}, {2}, {1}, {6, 8}, {0, 7}};
    A.W = {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}};
    A.Y = {{6, 8}, {3}, {3}, {6, 8}, {0, 7}, {0, 7}, {1}, {6, 8}};
    want_str(bad, "row route", extract_tbpaw(A, "rows"), "55072216807876543216833680707168");
    want_str(bad, "column route", extract_tbpaw(A, "cols"), "51683250733684225070761687168807");
    want_str(bad, "zigzag route", extract_tbpaw(A, "zigzag"), "36815236835074070752261687168078");

    Loaded c = load("cycle8.g", "cycle8.lab");
    want_str(bad, "vev cycle string", render(emit_vev_cycle(c.g, c.L)), "03325164257617880");

    Loaded m = load("lobster12.g", "lobster12.lab");
    auto five = multiple_meaning_emit(m.g, m.L);
    want_eq(bad, "relabelling count", five.size(), std::size_t{5});
    if (five.size() == 5) {
        want_str(bad, "first meaning", render(five[0]), "295110101286772685349231114210");
        want_str(bad, "fifth meaning", render(five[4]), "2175210191215613721189379251114310");
    }

    TbPaw da = toks({11, 1, 2, 3, 1, 34, 1, 34, 1, 4, 5, 1, 4, 5, 1, 56, 1, 56, 1, 6, 7,
                     11, 1, 34, 1, 2, 3, 11, 11, 2, 22, 1, 0, 1, 33});
    auto table = parse_substitution("x=11,y=22,z=33,a=34,b=56");
    want_str(bad, "substituted string", substitute(da, table),
             "x1231a1a1451451b1b167x1a123xx2y101z");
}

// ---------------------------------------------------------------- criterion 2

// independent partition enumerator: descending parts, no shared code
long long enum_exact(int m, int k, int maxpart) {
    if (k == 0) return m == 0 ? 1 : 0;
    if (m < k) return 0;
    long long c = 0;
    for (int first = std::min(m, maxpart); first >= 1; --first)
        c += enum_exact(m - first, k - 1, first);
    return c;
}

Labelling injective_line(const std::vector<int>& vlabs, const std::vector<int>& elabs) {
    Labelling L;
    for (std::size_t i = 0; i < vlabs.size(); ++i) L.vertex[(VertexId)i] = vlabs[i];
    for (std::size_t i = 0; i < elabs.size(); ++i) L.edge[(int)i] = elabs[i];
    return L;
}

void census_formulas(Problems& bad) {
    // matrix census against full enumeration
    for (int q = 1; q <= 4; ++q) {
        Graph g = path_graph(q + 1);
        Labelling L;
        for (int i = 0; i <= q; ++i) L.vertex[i] = (i % 2 == 0) ? i / 2 : q - i / 2;
        for (int e = 0; e < q; ++e)
            L.edge[e] = std::abs(L.vertex.at(g.edge(e).u) - L.vertex.at(g.edge(e).v));
        auto all = all_matrices(g, L);
        want_eq(bad, "matrix census q=" + std::to_string(q), BigInt(all.size()),
                matrix_census_count(q));
        std::set<std::string> uniq;
        for (auto& A : all) {
            std::ostringstream os;
            write_matrix(os, A);
            uniq.insert(os.str());
        }
        want_eq(bad, "matrix distinctness q=" + std::to_string(q), uniq.size(), all.size());
    }

    // raw (matrix, cell order) pairs, with a written dedup report
    std::ofstream report("tbpaw_dedup_report.txt");
    report << "raw (matrix, cell-order) pairs versus distinct rendered strings\n\n";
    for (int q = 1; q <= 2; ++q) {
        Graph g(2 * q);
        std::vector<int> vlabs, elabs;
        for (int e = 0; e < q; ++e) {
            g.add_edge(2 * e, 2 * e + 1);
            elabs.push_back(6 * e + 2);
        }
        for (int v = 0; v < 2 * q; ++v) vlabs.push_back(3 * v + 1);
        Labelling L = injective_line(vlabs, elabs);

        auto mats = all_matrices(g, L);
        std::vector<int> cells(3 * q);
        for (int i = 0; i < 3 * q; ++i) cells[i] = i;
        BigInt pairs = 0;
        std::set<std::string> strings;
        do {
            std::ostringstream route;
            route << "perm:";
            for (int i = 0; i < 3 * q; ++i) route << (i ? "," : "") << cells[i];
            for (auto& A : mats) {
                strings.insert(extract_tbpaw(A, route.str()));
                pairs += 1;
            }
        } while (std::next_permutation(cells.begin(), cells.end()));

        want_eq(bad, "raw pair count q=" + std::to_string(q), pairs, raw_pair_count(q));
        report << "q=" << q << ": matrices " << mats.size() << ", raw pairs " << pairs
               << ", distinct strings " << strings.size() << ", closed-form string count "
               << tbpaw_count(q) << "\n";
    }
    report << "\nThe closed form halves the raw pair count once: reciprocal cell orders\n"
              "walk the mirrored matrix, so each string class absorbs a factor 2. Observed\n"
              "string-level dedup can fall further below it because different matrices of\n"
              "the same labelled graph hold equal value multisets, so distinct pairs may\n"
              "render identically. The table above records both numbers side by side.\n";
    want(bad, report.good(), "dedup report not written");
    report.close();

    // partition recursion against the independent enumerator
    for (int m = 1; m <= 40; ++m) {
        long long total = 0;
        for (int k = 1; k <= m; ++k) {
            long long got = partitions_exact(m, k);
            long long ref = enum_exact(m, k, m);
            if (got != ref) {
                bad.push_back("partitions m=" + std::to_string(m) + " k=" + std::to_string(k) +
                              ": got " + std::to_string(got) + " expected " + std::to_string(ref));
                return;
            }
            total += got;
        }
        want_eq(bad, "partition total m=" + std::to_string(m), partitions_max_part(m, m), total);
    }

    // cycle emission variants against direct sequence enumeration
    for (int n = 3; n <= 4; ++n) {
        std::vector<int> sizes(n, 0);
        bool carry = false;
        while (!carry) {
            std::vector<std::vector<int>> members(n);
            for (int b = 0; b < n; ++b)
                for (int t = 0; t < sizes[b]; ++t) members[b].push_back(100 * (b + 1) + t);
            members[0].push_back(n);      // near cut end keeps the far spine vertex
            members[n - 1].push_back(1);  // and vice versa
            std::set<std::vector<int>> seqs;
            std::vector<int> seq;
            std::function<void(int, int)> walk = [&](int start, int step) {
                if (step == n) {
                    seqs.insert(seq);
                    return;
                }
                int b = (start + step) % n;
                std::vector<int> mem = members[b];
                std::sort(mem.begin(), mem.end());
                do {
                    std::size_t mark = seq.size();
                    seq.push_back(b + 1);
                    seq.insert(seq.end(), mem.begin(), mem.end());
                    walk(start, step + 1);
                    seq.resize(mark);
                } while (std::next_permutation(mem.begin(), mem.end()));
            };
            for (int s = 0; s < n; ++s) walk(s, 0);
            std::ostringstream label;
            label << "cycle variants n=" << n << " sizes";
            for (int x : sizes) label << " " << x;
            want_eq(bad, label.str(), BigInt(seqs.size()), cycle_variant_count(sizes));

            int pos = 0;
            while (pos < n && ++sizes[pos] > 2) sizes[pos++] = 0;
            carry = pos == n;
        }
    }

    // headline stays factored; small orders expand to the raw count
    want_str(bad, "headline form", headline_count(190).to_string(), "(570!)(190!)2^190");
    for (int q = 1; q <= 6; ++q)
        want_eq(bad, "headline expansion q=" + std::to_string(q), headline_count(q).expand(),
                raw_pair_count(q));
    want_eq(bad, "string census q=2", tbpaw_count(2), BigInt(2880));
}

// ---------------------------------------------------------------- criterion 3

bool caterpillar_like(const Graph& t) {
    TreeKind k = classify_tree(t).kind;
    return k == TreeKind::path || k == TreeKind::caterpillar;
}

void constructions(Problems& bad) {
    int built = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& t : all_trees(n)) {
            // set labellings exist for every tree
            Scheme inter{"graceful-intersection", {}};
            auto rep = verify_set(t, intersection_set_labelling(t, false), inter);
            want(bad, rep.pass(), "intersection labelling fails on a tree with " +
                                      std::to_string(n) + " vertices");
            Scheme ointer{"odd-graceful-intersection", {}};
            auto orep = verify_set(t, intersection_set_labelling(t, true), ointer);
            want(bad, orep.pass(), "odd intersection labelling fails on a tree with " +
                                       std::to_string(n) + " vertices");
            for (RainbowSpec::Kind kind :
                 {RainbowSpec::Kind::regular, RainbowSpec::Kind::odd, RainbowSpec::Kind::fibonacci}) {
                RainbowSpec spec;
                spec.kind = kind;
                auto rrep = verify_rainbow(t, rainbow_set_labelling(t, spec), spec);
                want(bad, rrep.pass(), "rainbow labelling fails on a tree with " +
                                           std::to_string(n) + " vertices");
            }

            if (!caterpillar_like(t)) continue;
            ++built;
            Labelling f = construct_set_ordered_graceful_caterpillar(t);
            Scheme sog{"set-ordered-graceful", {}};
            want(bad, verify(t, f, sog).pass(), "set-ordered graceful construction fails");
            Labelling odd = graceful_to_odd_graceful(t, f);
            Scheme soog{"set-ordered-odd-graceful", {}};
            want(bad, verify(t, odd, soog).pass(), "odd transform fails");
        }
    }
    want(bad, built >= 20, "caterpillar corpus unexpectedly small");

    // lobster extension over random leaf plans
    Lcg rng(414213562);
    Scheme og{"odd-graceful", {}};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> spine(rng.range(2, 5));
        for (int& s : spine) s = (int)rng.below(4);
        Graph cat = caterpillar_graph(spine);
        Labelling odd = graceful_to_odd_graceful(cat, construct_set_ordered_graceful_caterpillar(cat));
        std::map<VertexId, int> plan;
        for (VertexId v = 0; v < cat.vertex_count(); ++v)
            if (cat.degree(v) == 1 && rng.below(2)) plan[v] = rng.range(1, 3);
        if (plan.empty()) plan[cat.vertex_count() - 1] = 1;
        LabelledGraph lob = extend_caterpillar_to_lobster(cat, odd, plan);
        want(bad, lob.graph.is_tree(), "lobster extension is not a tree");
        if (!verify(lob.graph, lob.labelling, og).pass()) {
            bad.push_back("lobster extension fails odd-graceful at trial " + std::to_string(trial));
            break;
        }
    }

    // derived equivalents of one labelling
    Graph eq_host = caterpillar_graph({2, 1, 3});
    Labelling eq_f = construct_set_ordered_graceful_caterpillar(eq_host);
    for (auto& [sch, lab] : equivalence_suite(eq_host, eq_f, 3, 2))
        want(bad, verify(eq_host, lab, sch).pass(), "equivalent labelling fails " + sch.name);

    // the six-clause total labelling facts
    Loaded six = load("tree13.g", "tree13.lab");
    auto srep = verify(six.g, six.L, six.scheme);
    want(bad, srep.pass(), "six clause labelling rejected");
    want_eq(bad, "six clause k", srep.facts["k"], 13);
    want_eq(bad, "six clause k2", srep.facts["k2"], 26);
    want_eq(bad, "six clause singularity", srep.facts["singularity"], 13);

    // mirror labelling constants on a sixteen edge host
    Graph host = caterpillar_graph({3, 2, 3, 2, 2});
    want_eq(bad, "mirror host edges", host.edge_count(), 16);
    Labelling hf = construct_set_ordered_graceful_caterpillar(host);
    Labelling hg = image_labelling(host, hf);
    for (int e = 0; e < host.edge_count(); ++e)
        if (hf.edge.at(e) + hg.edge.at(e) != 17) {
            bad.push_back("mirror edge sum is not 17");
            break;
        }
    Labelling ho = graceful_to_odd_graceful(host, hf);
    Labelling hgo = image_labelling_odd(host, ho);
    for (int e = 0; e < host.edge_count(); ++e)
        if (ho.edge.at(e) + hgo.edge.at(e) != 32) {
            bad.push_back("odd mirror edge sum is not 32");
            break;
        }
}

// ---------------------------------------------------------------- criterion 4

void groups(Problems& bad) {
    EveryZeroGraphicGroup base = load_group(data_path("grp14.grp"));
    for (int n = 2; n <= 16; ++n) {
        EveryZeroGraphicGroup grp = build_group(base.base, base.f, n);
        auto fails = group_axiom_failures(grp);
        if (!fails.empty()) {
            bad.push_back("group axioms fail at n=" + std::to_string(n) + ": " + fails.front());
            break;
        }
    }

    // the addition identity, both on indices and on the labels themselves
    want_eq(bad, "index addition", base.add(2, 5, 1), 6);
    Labelling h2 = base.element(2), h5 = base.element(5), h1 = base.element(1),
              h6 = base.element(6);
    for (auto& [v, a] : h6.vertex) {
        int sum = ((h2.vertex.at(v) + h5.vertex.at(v) - h1.vertex.at(v)) % 14 + 14) % 14;
        if (sum != a) {
            bad.push_back("labelwise addition disagrees at vertex " + std::to_string(v));
            break;
        }
    }

    // matrix shift family: closure by index arithmetic, edge row frozen
    TopsnutMatrix A = matrix_from_graph(base.base, base.f);
    for (int n = 2; n <= 16; ++n) {
        auto fam = matrix_group(A, n);
        want_eq(bad, "family size n=" + std::to_string(n), fam.size(), (std::size_t)n);
        std::set<std::string> uniq;
        for (auto& M : fam) {
            want(bad, M.W == A.W, "edge row moved inside the matrix family");
            std::ostringstream os;
            write_matrix(os, M);
            uniq.insert(os.str());
        }
        want_eq(bad, "family distinct n=" + std::to_string(n), uniq.size(), fam.size());
        for (int a = 0; a < n && bad.empty(); ++a) {
            auto shifted = matrix_group(fam[a], n);
            for (int b = 0; b < n; ++b)
                if (!(shifted[b] == fam[(a + b) % n])) {
                    bad.push_back("matrix shifts do not compose at n=" + std::to_string(n));
                    break;
                }
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void colorings(Problems& bad) {
    Lcg rng(271828182);
    std::map<int, EveryZeroGraphicGroup> groups;
    EveryZeroGraphicGroup base = load_group(data_path("grp14.grp"));
    auto group_of = [&](int n) -> EveryZeroGraphicGroup& {
        auto it = groups.find(n);
        if (it == groups.end()) it = groups.emplace(n, build_group(base.base, base.f, n)).first;
        return it->second;
    };

    for (int trial = 0; trial < 500; ++trial) {
        int nv = rng.range(2, 13);  // up to twelve edges
        Graph t = random_tree(nv, rng);
        int n = rng.range(6, 16);
        int zero = rng.range(1, n);
        VertexId start = (VertexId)rng.below(nv);
        std::vector<int> seq;
        for (int e = 0; e < t.edge_count(); ++e) seq.push_back(rng.range(1, n));
        GroupLabelling gl = tree_group_coloring(t, group_of(n), seq, zero, start);
        auto fails = group_labelling_failures(gl);
        if (!fails.empty()) {
            bad.push_back("colouring invalid at trial " + std::to_string(trial) + ": " +
                          fails.front());
            break;
        }
        // edge rule and exact sequence coverage, checked directly
        std::multiset<int> used, given(seq.begin(), seq.end());
        for (int e = 0; e < t.edge_count(); ++e) {
            const Edge& ed = t.edge(e);
            int lhs = ((gl.vertex_index.at(ed.u) + gl.vertex_index.at(ed.v) - zero - 1) % n + n) % n + 1;
            if (lhs != gl.edge_index.at(e)) {
                bad.push_back("edge rule broken at trial " + std::to_string(trial));
                break;
            }
            used.insert(gl.edge_index.at(e));
        }
        std::multiset<int> norm;
        for (int s : given) norm.insert((s - 1) % n + 1);
        if (used != norm) {
            bad.push_back("sequence coverage broken at trial " + std::to_string(trial));
            break;
        }
    }

    // complete bipartite hosts, every shape with at most twelve edges
    for (int m = 1; m <= 12; ++m)
        for (int nc = m; m * nc <= 12; ++nc) {
            auto& grp = group_of(14);
            GroupLabelling gl = complete_bipartite_group_labelling(m, nc, grp, 2, 3);
            auto fails = group_labelling_failures(gl);
            if (!fails.empty()) {
                bad.push_back("bipartite colouring invalid at " + std::to_string(m) + "x" +
                              std::to_string(nc) + ": " + fails.front());
                continue;
            }
            for (int e = 0; e < gl.host.edge_count(); ++e)
                if (gl.edge_index.at(e) != (2 + 3 * e - 1) % 14 + 1) {
                    bad.push_back("bipartite progression broken at " + std::to_string(m) + "x" +
                                  std::to_string(nc));
                    break;
                }
        }
    bool degenerate_caught = false;
    try {
        complete_bipartite_group_labelling(2, 3, group_of(14), 2, 14);
    } catch (const Error&) {
        degenerate_caught = true;
    }
    want(bad, degenerate_caught, "degenerate progression step not rejected");
}

// ---------------------------------------------------------------- criterion 6

bool connected_without_edges(const Graph& g, const std::vector<int>& skip) {
    std::vector<char> dead(g.edge_count(), 0);
    for (int e : skip) dead[e] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (dead[e] || !g.edge(e).touches(v)) continue;
            VertexId w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.vertex_count();
}

bool any_subset_disconnects(const Graph& g, int k) {
    std::vector<int> pick(k);
    std::function<bool(int, int)> go = [&](int idx, int from) -> bool {
        if (idx == k) return !connected_without_edges(g, pick);
        for (int e = from; e < g.edge_count(); ++e) {
            pick[idx] = e;
            if (go(idx + 1, e + 1)) return true;
        }
        return false;
    };
    return go(0, 0);
}

void connectivity(Problems& bad) {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            SplitConnectivity sc = v_split_connectivity(g);
            bool complete = g.edge_count() == n * (n - 1) / 2;
            if (complete) {
                if (sc.gamma) {
                    bad.push_back("complete graph on " + std::to_string(n) +
                                  " vertices reports a split number");
                    return;
                }
            } else if (!sc.gamma || *sc.gamma != sc.kappa) {
                bad.push_back("split number differs from connectivity on " + std::to_string(n) +
                              " vertices");
                return;
            }
        }
    }

    Graph g = bridged_cliques();
    auto es = e_split_connectivity(g, g.edge_count());
    auto vs = v_split_connectivity(g);
    want(bad, es.has_value() && *es == 2, "edge split number is not 2");
    want(bad, vs.gamma.has_value() && *vs.gamma == 4, "vertex split number is not 4");
    want_eq(bad, "vertex connectivity", kappa(g), 4);
    want_eq(bad, "edge connectivity", kappa_prime(g), 5);
    want_eq(bad, "minimum degree", g.min_degree(), 5);
    // edge connectivity cross-checked by exhaustive small cuts
    for (int k = 1; k <= 4; ++k)
        want(bad, !any_subset_disconnects(g, k),
             "an edge cut smaller than 5 disconnects the bridged cliques");
}

// ---------------------------------------------------------------- criterion 7

void pipeline(Problems& bad) {
    long long t = 0;
    Graph snap = load_snapshot(data_path("net50.snap"), t);
    want_eq(bad, "snapshot timestep", t, 7);
    want_eq(bad, "snapshot size", snap.vertex_count(), 50);

    EveryZeroGraphicGroup grp = load_group(data_path("grp14.grp"));
    PipelineResult one = pipeline_encrypt(snap, t, grp, 'A', 7);
    PipelineResult two = pipeline_encrypt(snap, t, grp, 'A', 7);
    want(bad, one.emission.rendered() == two.emission.rendered(),
         "identical inputs gave different strings");
    auto fails = network_invariant_failures(one.net);
    if (!fails.empty()) bad.push_back("network invariants: " + fails.front());
    want_eq(bad, "block count", one.net.blocks.size(), std::size_t{50 + 49});
    want_eq(bad, "join count", one.net.joins.size(), std::size_t{2 * 49});

    int total = 0;
    for (auto& c : one.emission.components) {
        if ((int)c.text.size() != c.length) {
            bad.push_back("component accounting off for " + c.name);
            break;
        }
        total += c.length;
    }
    want_eq(bad, "emission total", total, one.emission.total);
    want_eq(bad, "rendered size", one.emission.rendered().size(), (std::size_t)one.emission.total);

    PipelineResult other = pipeline_encrypt(snap, t, grp, 'C', 7);
    auto cfails = network_invariant_failures(other.net);
    if (!cfails.empty()) bad.push_back("degree preserving variant: " + cfails.front());
    want(bad, one.emission.rendered() != other.emission.rendered(),
         "different tree algorithms agree unexpectedly");

    // component table: declared lengths must add up to the published total
    std::ifstream table(data_path("net_components.txt"));
    want(bad, table.good(), "component table missing");
    std::string line;
    int declared_sum = 0, rendered_sum = 0, mismatches = 0, rows = 0;
    while (std::getline(table, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string name, text;
        int len = 0;
        if (!(is >> name >> text >> len)) continue;
        ++rows;
        declared_sum += len;
        rendered_sum += (int)text.size();
        if ((int)text.size() != len) ++mismatches;
    }
    want_eq(bad, "component rows", rows, 25);
    want_eq(bad, "declared length total", declared_sum, 307);
    want_eq(bad, "declared minus rendered", declared_sum - rendered_sum, mismatches);
    want_eq(bad, "length mismatches in the table", mismatches, 1);
}

// --------------------------------------------------------------------- driver

int run(int id, const std::string& label, const std::function<void(Problems&)>& body) {
    Problems bad;
    auto start = std::chrono::steady_clock::now();
    try {
        body(bad);
    } catch (const std::exception& e) {
        bad.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (bad.empty() ? "PASS" : "FAIL") << " criterion " << id << ": " << label << " (" << secs
       << "s)";
    std::cout << os.str() << "\n";
    for (std::size_t i = 0; i < bad.size() && i < 5; ++i) std::cout << "       " << bad[i] << "\n";
    return bad.empty() ? 0 : 1;
}

}  // namespace

int main() {
    int failed = 0;
    failed += run(1, "frozen emission, route and substitution strings", frozen_strings);
    failed += run(2, "census formulas against direct enumeration", census_formulas);
    failed += run(3, "labelling constructions verified over exhaustive corpora", constructions);
    failed += run(4, "graphic and matrix group laws up to order sixteen", groups);
    failed += run(5, "group colourings on random trees and bipartite hosts", colorings);
    failed += run(6, "split connectivity equals vertex connectivity; quintuple check", connectivity);
    failed += run(7, "network pipeline determinism and exact accounting", pipeline);
    std::cout << (failed == 0 ? "all criteria hold" : "criteria failing: " + std::to_string(failed))
              << "\n";
    return failed;
}
