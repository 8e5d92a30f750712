// Command-line front end. Subcommands map 1:1 onto library operations;
// every randomized path takes --seed (env TOPSNUT_SEED as fallback).
// Exit codes: 0 ok, 1 failed check or library error, 2 usage.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topsnut/connectivity.hpp"
#include "topsnut/construct.hpp"
#include "topsnut/counting.hpp"
#include "topsnut/emit.hpp"
#include "topsnut/error.hpp"
#include "topsnut/graph.hpp"
#include "topsnut/group.hpp"
#include "topsnut/labelling.hpp"
#include "topsnut/matrix.hpp"
#include "topsnut/netcrypt.hpp"
#include "topsnut/noise.hpp"
#include "topsnut/spantree.hpp"
#include "topsnut/token.hpp"

namespace {

using namespace topsnut;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (auto& tok : split_commas(s)) out.push_back(std::stoi(tok));
    return out;
}

// "u1" style names count from 1, bare integers are vertex ids
VertexId parse_vertex(const std::string& tok) {
    std::size_t i = 0;
    while (i < tok.size() && !isdigit((unsigned char)tok[i]) && tok[i] != '-') ++i;
    if (i == tok.size()) fail("BadVertexToken", tok);
    int v = std::stoi(tok.substr(i));
    return i > 0 ? v - 1 : v;
}

std::vector<VertexId> parse_vertices(const std::string& s) {
    std::vector<VertexId> out;
    for (auto& tok : split_commas(s)) out.push_back(parse_vertex(tok));
    return out;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TOPSNUT_SEED")) return std::stoull(env);
    return 1;
}

struct Inputs {
    std::string graph_path, labels_path;
    Graph g;
    Labelling L;
    Scheme scheme;

    void load_graph() { g = read_graph_file(graph_path); }
    void load_all() {
        load_graph();
        L = load_labelling(labels_path, g, scheme);
    }
};

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) fail("FileNotFound", out_path);
    os << text;
}

int report_outcome(const VerificationReport& rep) {
    if (!rep.facts.empty()) {
        bool first = true;
        for (auto& [k, v] : rep.facts) {
            std::cout << (first ? "" : " ") << k << '=' << v;
            first = false;
        }
        std::cout << '\n';
    }
    for (auto& viol : rep.violations)
        std::cout << "violation " << viol.clause << ": " << viol.witness << '\n';
    std::cout << (rep.violations.empty() ? "pass" : "fail") << '\n';
    return rep.violations.empty() ? 0 : 1;
}

Sweep parse_sweep(const std::string& s) {
    if (s == "mini") return Sweep::up;
    if (s == "maxi") return Sweep::down;
    fail("BadSweep", s);
}

std::string shape_name(const Graph& g) {
    if (!g.connected()) return "disconnected";
    if (g.is_tree()) return to_string(classify_tree(g).kind);
    bool all2 = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) all2 = false;
    if (all2 && g.edge_count() == g.vertex_count()) return "cycle";
    return "graph";
}

int run_label(Inputs& in, const std::string& make, const std::string& out_path) {
    in.load_graph();
    Labelling out;
    Scheme sch;
    if (make == "set-ordered-graceful") {
        out = construct_set_ordered_graceful_caterpillar(in.g);
        sch.name = "set-ordered-graceful";
    } else if (make == "odd-graceful") {
        Labelling base = in.labels_path.empty()
                             ? construct_set_ordered_graceful_caterpillar(in.g)
                             : load_labelling(in.labels_path, in.g, sch);
        out = graceful_to_odd_graceful(in.g, base);
        sch = Scheme{};
        sch.name = "set-ordered-odd-graceful";
    } else if (make == "image" || make == "image-odd") {
        if (in.labels_path.empty()) fail("MissingInput", make + " needs --labels");
        Labelling base = load_labelling(in.labels_path, in.g, sch);
        out = make == "image" ? image_labelling(in.g, base) : image_labelling_odd(in.g, base);
        sch = Scheme{};
    } else if (make == "6c") {
        Labelling base = in.labels_path.empty()
                             ? construct_set_ordered_graceful_caterpillar(in.g)
                             : load_labelling(in.labels_path, in.g, sch);
        out = six_c_from_set_ordered_graceful(in.g, base);
        sch = Scheme{};
        sch.name = "6c";
    } else if (make == "dual") {
        if (in.labels_path.empty()) fail("MissingInput", "dual needs --labels");
        Labelling base = load_labelling(in.labels_path, in.g, sch);
        out = dual_labelling(base);
    } else {
        fail("BadConstruction", make);
    }
    std::ostringstream os;
    write_labelling(os, in.g, out, sch);
    write_text(out_path, os.str());
    return 0;
}

int run_verify(Inputs& in, const std::string& scheme_flag) {
    in.load_all();
    if (!scheme_flag.empty()) in.scheme.name = scheme_flag;
    if (in.scheme.name.empty() || in.scheme.name == "none")
        fail("MissingScheme", "no scheme in file and no --scheme");
    return report_outcome(verify(in.g, in.L, in.scheme));
}

int run_matrix(Inputs& in, bool recip, const std::string& out_path) {
    in.load_all();
    TopsnutMatrix A = matrix_from_graph(in.g, in.L);
    if (recip) A = reciprocal(A);
    std::ostringstream os;
    write_matrix(os, A);
    write_text(out_path, os.str());
    return 0;
}

struct TbpawOpts {
    std::string method, kind = "vv", sweep = "mini", route = "rows", path, out_path;
    int rotation = 0, rule = 0;
    std::optional<int> hub;
};

int run_tbpaw(Inputs& in, const TbpawOpts& o) {
    in.load_all();
    const Graph& g = in.g;
    const Labelling& L = in.L;
    bool vev = o.kind == "vev";
    if (o.kind != "vv" && o.kind != "vev") fail("BadKind", o.kind);
    Sweep sw = parse_sweep(o.sweep);
    std::string text;
    if (o.method == "route") {
        text = extract_tbpaw(matrix_from_graph(g, L), o.route);
    } else if (o.method == "meaning") {
        auto all = o.hub ? multiple_meaning_emit(g, L, *o.hub) : multiple_meaning_emit(g, L);
        if (o.rule != 0) {
            if (o.rule < 1 || o.rule > (int)all.size()) fail("BadRule", std::to_string(o.rule));
            text = render(all[o.rule - 1]);
        } else {
            std::string acc;
            for (auto& d : all) acc += render(d) + "\n";
            write_text(o.out_path, acc);
            return 0;
        }
    } else {
        TbPaw d;
        if (o.method == "path") {
            if (!o.path.empty()) {
                auto seq = parse_vertices(o.path);
                d = vev ? emit_vev_walk(g, L, seq) : emit_vv_walk(g, L, seq);
            } else {
                d = vev ? emit_vev_path(g, L) : emit_vv_path(g, L);
            }
        } else if (o.method == "cycle") {
            d = vev ? emit_vev_cycle(g, L) : emit_vv_cycle(g, L);
        } else if (o.method == "neighbor") {
            d = vev ? emit_vev_neighbor(g, L, sw) : emit_vv_neighbor(g, L, sw);
        } else if (o.method == "sun") {
            d = vev ? emit_vev_sun(g, L, sw, o.rotation) : emit_vv_sun(g, L, sw, o.rotation);
        } else if (o.method == "spider") {
            d = vev ? emit_vev_spider(g, L, sw) : emit_vv_spider(g, L, sw);
        } else if (o.method == "lobster") {
            d = vev ? emit_vev_lobster(g, L, sw) : emit_vv_lobster(g, L, sw);
        } else if (o.method == "hub") {
            d = o.hub ? emit_vev_hub(g, L, *o.hub) : emit_vev_hub(g, L);
        } else if (o.method == "euler") {
            d = emit_vev_euler(g, L);
        } else {
            fail("BadMethod", o.method);
        }
        text = render(d);
    }
    write_text(o.out_path, text + "\n");
    return 0;
}

int run_count(const std::string& what, int q, int p, int m, const std::string& blocks) {
    BigInt result;
    if (what == "tbpaws") {
        if (q < 1) fail("BadParameter", "--q must be positive");
        result = factorial(3 * q) * factorial(q) * boost::multiprecision::pow(BigInt(2), q - 1);
    } else if (what == "matrices") {
        if (q < 1) fail("BadParameter", "--q must be positive");
        result = factorial(q) * boost::multiprecision::pow(BigInt(2), q);
    } else if (what == "raw") {
        if (q < 1) fail("BadParameter", "--q must be positive");
        result = factorial(3 * q) * factorial(q) * boost::multiprecision::pow(BigInt(2), q);
    } else if (what == "leaf-additions") {
        result = leaf_addition_count(p, m);
    } else if (what == "cycles") {
        result = cycle_variant_count(parse_ints(blocks));
    } else if (what == "headline") {
        std::cout << headline_count(q).to_string() << "\n";
        return 0;
    } else if (what == "foldlines") {
        result = foldline_total(q);
    } else {
        fail("BadCountKind", what);
    }
    std::cout << result << "\n";
    return 0;
}

int run_noise(const std::string& mode, const std::string& table, const std::string& tokens,
              const std::string& input, std::optional<std::uint64_t> seed, int count) {
    if (mode == "substitute") {
        TbPaw d;
        for (int x : parse_ints(tokens)) d.push_back(Token::num(x));
        std::cout << substitute(d, parse_substitution(table)) << "\n";
    } else if (mode == "unsubstitute") {
        std::cout << unsubstitute(input, parse_substitution(table)) << "\n";
    } else if (mode == "insert") {
        std::cout << insert_letters(input, resolve_seed(seed), count) << "\n";
    } else if (mode == "strip") {
        std::cout << strip_letters(input) << "\n";
    } else {
        fail("BadNoiseMode", mode);
    }
    return 0;
}

int run_group(const std::string& group_file, Inputs& in, int n, bool check,
              std::optional<int> element, const std::string& add, int zero) {
    EveryZeroGraphicGroup grp;
    if (!group_file.empty()) {
        grp = load_group(group_file);
    } else {
        in.load_all();
        grp = build_group(in.g, in.L, n);
    }
    std::cout << "n=" << grp.n << "\n";
    if (check) {
        auto bad = group_axiom_failures(grp);
        for (auto& msg : bad) std::cout << "violation " << msg << "\n";
        std::cout << (bad.empty() ? "pass" : "fail") << "\n";
        if (!bad.empty()) return 1;
    }
    if (element) {
        Labelling h = grp.element(*element);
        Scheme sch;
        write_labelling(std::cout, grp.base, h, sch);
    }
    if (!add.empty()) {
        auto ij = parse_ints(add);
        if (ij.size() != 2) fail("BadParameter", "--add wants i,j");
        std::cout << "result=" << grp.add(ij[0], ij[1], zero) << "\n";
    }
    return 0;
}

int run_spantree(Inputs& in, char algo, int k, const std::string& forced,
                 const std::string& out_path) {
    in.load_graph();
    Graph tree;
    std::string note;
    if (algo == 'A') {
        auto st = spanning_tree_max_leaf(in.g);
        tree = st.tree;
        std::ostringstream os;
        os << "# dominating";
        for (VertexId v : st.dominating_set) os << ' ' << v;
        note = os.str();
    } else if (algo == 'B') {
        std::vector<VertexId> want = forced.empty() ? std::vector<VertexId>{0}
                                                    : parse_vertices(forced);
        auto dom = spanning_tree_predefined(in.g, want);
        tree = tree_from_dominating_set(in.g, dom);
        std::ostringstream os;
        os << "# dominating";
        for (VertexId v : dom) os << ' ' << v;
        note = os.str();
    } else if (algo == 'C') {
        tree = spanning_tree_degree_preserve(in.g, k > 0 ? k : in.g.max_degree());
    } else {
        fail("BadAlgorithm", std::string(1, algo));
    }
    std::ostringstream os;
    if (!note.empty()) os << note << "\n";
    write_graph(os, tree);
    write_text(out_path, os.str());
    return 0;
}

struct EncryptOpts {
    std::string snapshot, group_file, sequence, route = "rows", out_path;
    char algo = 'A';
    std::optional<std::uint64_t> seed;
    int zero = 1, start = 0;
};

int run_encrypt(Inputs& in, const EncryptOpts& o) {
    if (o.group_file.empty()) fail("MissingInput", "encrypt needs --group-file");
    EveryZeroGraphicGroup grp = load_group(o.group_file);
    EncryptedNetwork net;
    NetworkEmission em;
    if (!o.snapshot.empty()) {
        long long t = 0;
        Graph snap = load_snapshot(o.snapshot, t);
        auto res = pipeline_encrypt(snap, t, grp, o.algo, resolve_seed(o.seed));
        net = res.net;
        em = o.route == "rows" ? res.emission
                               : emit_tbpaw(net, default_edge_walk(net.host), o.route);
        std::cout << "t=" << res.timestep << " algo=" << o.algo
                  << " tree_edges=" << res.tree.edge_count() << "\n";
    } else {
        in.load_graph();
        if (o.sequence.empty()) fail("MissingInput", "encrypt needs --sequence or --snapshot");
        GroupLabelling gl =
            tree_group_coloring(in.g, grp, parse_ints(o.sequence), o.zero, o.start);
        net = encrypt_network(in.g, grp, gl, smallest_vertex_join());
        em = emit_tbpaw(net, default_edge_walk(net.host), o.route);
    }
    std::cout << "blocks=" << net.blocks.size() << " joins=" << net.joins.size()
              << " components=" << em.components.size() << " total=" << em.total << "\n";
    if (!o.out_path.empty()) {
        std::ofstream os(o.out_path);
        if (!os) fail("FileNotFound", o.out_path);
        write_network(os, net);
    }
    std::cout << em.rendered() << "\n";
    return 0;
}

int run_classify(Inputs& in, bool split) {
    in.load_graph();
    const Graph& g = in.g;
    std::cout << "p=" << g.vertex_count() << " q=" << g.edge_count() << "\n";
    std::cout << "connected=" << (g.connected() ? 1 : 0) << " tree=" << (g.is_tree() ? 1 : 0)
              << " bipartite=" << (g.bipartition() ? 1 : 0) << "\n";
    if (g.vertex_count() > 0)
        std::cout << "max_degree=" << g.max_degree() << " min_degree=" << g.min_degree() << "\n";
    std::cout << "shape=" << shape_name(g) << "\n";
    if (split) {
        auto vs = v_split_connectivity(g);
        std::cout << "kappa=" << vs.kappa;
        if (vs.gamma) std::cout << " gamma_vs=" << *vs.gamma;
        try {
            auto es = e_split_connectivity(g, std::min(g.edge_count(), 36));
            if (es) std::cout << " gamma_es=" << *es;
        } catch (const Error&) {
            // edge split search too large, leave the fact out
        }
        std::cout << " delta=" << g.min_degree() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"labelled graphs, Topsnut matrices and text-based passwords"};
    app.require_subcommand(1);

    Inputs in;
    std::string make, out_path, scheme_flag;
    bool recip = false, check = false, split = false;
    TbpawOpts to;
    EncryptOpts eo;
    std::string count_what, blocks, noise_mode, table, tokens, noise_in, group_file, forced, add;
    int q = 0, p = 0, m = 0, n = 0, k = 0, noise_count = 1, zero = 1;
    std::optional<int> element, hub;
    std::optional<std::uint64_t> seed;
    std::string algo = "A";

    auto* label = app.add_subcommand("label", "construct a labelling for a graph");
    label->add_option("--graph", in.graph_path)->required();
    label->add_option("--make", make)->required();
    label->add_option("--labels", in.labels_path);
    label->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "check a labelling against a scheme");
    verify_cmd->add_option("--graph", in.graph_path)->required();
    verify_cmd->add_option("--labels", in.labels_path)->required();
    verify_cmd->add_option("--scheme", scheme_flag);

    auto* matrix_cmd = app.add_subcommand("matrix", "print the matrix of a labelled graph");
    matrix_cmd->add_option("--graph", in.graph_path)->required();
    matrix_cmd->add_option("--labels", in.labels_path)->required();
    matrix_cmd->add_flag("--reciprocal", recip);
    matrix_cmd->add_option("--out", out_path);

    auto* tbpaw_cmd = app.add_subcommand("tbpaw", "emit a text-based password");
    tbpaw_cmd->add_option("method", to.method,
                          "path|cycle|neighbor|sun|spider|lobster|hub|euler|route|meaning")
        ->required();
    tbpaw_cmd->add_option("--graph", in.graph_path)->required();
    tbpaw_cmd->add_option("--labels", in.labels_path)->required();
    tbpaw_cmd->add_option("--kind", to.kind, "vv|vev");
    tbpaw_cmd->add_option("--sweep", to.sweep, "mini|maxi");
    tbpaw_cmd->add_option("--rotation", to.rotation);
    tbpaw_cmd->add_option("--rule", to.rule, "meaning only: 1..5, 0 = all");
    tbpaw_cmd->add_option("--hub", hub);
    tbpaw_cmd->add_option("--path", to.path, "comma-separated vertices, u1 style is 1-based");
    tbpaw_cmd->add_option("--route", to.route);
    tbpaw_cmd->add_option("--out", to.out_path);

    auto* count_cmd = app.add_subcommand("count", "closed-form counts");
    count_cmd->add_option("what", count_what,
                          "tbpaws|matrices|raw|leaf-additions|cycles|headline|foldlines")
        ->required();
    count_cmd->add_option("--q", q);
    count_cmd->add_option("--p", p);
    count_cmd->add_option("--m", m);
    count_cmd->add_option("--blocks", blocks);

    auto* noise_cmd = app.add_subcommand("noise", "letter noise over digit strings");
    noise_cmd->add_option("--mode", noise_mode, "substitute|unsubstitute|insert|strip")
        ->required();
    noise_cmd->add_option("--table", table, "x=11,y=22 style rules");
    noise_cmd->add_option("--tokens", tokens, "comma-separated token values");
    noise_cmd->add_option("--in", noise_in);
    noise_cmd->add_option("--seed", seed);
    noise_cmd->add_option("--count", noise_count);

    auto* group_cmd = app.add_subcommand("group", "every-zero graphic groups");
    group_cmd->add_option("--group-file", group_file);
    group_cmd->add_option("--graph", in.graph_path);
    group_cmd->add_option("--labels", in.labels_path);
    group_cmd->add_option("--n", n);
    group_cmd->add_flag("--check", check);
    group_cmd->add_option("--element", element);
    group_cmd->add_option("--add", add, "i,j");
    group_cmd->add_option("--zero", zero);

    auto* span_cmd = app.add_subcommand("spantree", "spanning trees of a connected graph");
    span_cmd->add_option("--graph", in.graph_path)->required();
    span_cmd->add_option("--algo", algo, "A|B|C");
    span_cmd->add_option("--k", k);
    span_cmd->add_option("--forced", forced, "vertices the dominating set must contain");
    span_cmd->add_option("--out", out_path);

    auto* enc_cmd = app.add_subcommand("encrypt", "build an encrypted network");
    enc_cmd->add_option("--snapshot", eo.snapshot);
    enc_cmd->add_option("--graph", in.graph_path);
    enc_cmd->add_option("--group-file", eo.group_file)->required();
    enc_cmd->add_option("--algo", algo, "A|B|C");
    enc_cmd->add_option("--seed", eo.seed);
    enc_cmd->add_option("--route", eo.route);
    enc_cmd->add_option("--zero", eo.zero);
    enc_cmd->add_option("--start", eo.start);
    enc_cmd->add_option("--sequence", eo.sequence, "comma-separated element indices");
    enc_cmd->add_option("--out", eo.out_path, "write the network dump here");

    auto* cls_cmd = app.add_subcommand("classify", "shape and connectivity report");
    cls_cmd->add_option("--graph", in.graph_path)->required();
    cls_cmd->add_flag("--split", split);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(label)) return run_label(in, make, out_path);
        if (app.got_subcommand(verify_cmd)) return run_verify(in, scheme_flag);
        if (app.got_subcommand(matrix_cmd)) return run_matrix(in, recip, out_path);
        if (app.got_subcommand(tbpaw_cmd)) {
            to.hub = hub;
            return run_tbpaw(in, to);
        }
        if (app.got_subcommand(count_cmd)) return run_count(count_what, q, p, m, blocks);
        if (app.got_subcommand(noise_cmd))
            return run_noise(noise_mode, table, tokens, noise_in, seed, noise_count);
        if (app.got_subcommand(group_cmd))
            return run_group(group_file, in, n, check, element, add, zero);
        if (app.got_subcommand(span_cmd)) return run_spantree(in, algo[0], k, forced, out_path);
        if (app.got_subcommand(enc_cmd)) {
            eo.algo = algo[0];
            return run_encrypt(in, eo);
        }
        if (app.got_subcommand(cls_cmd)) return run_classify(in, split);
    } catch (const Error& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    }
    return 2;
}
