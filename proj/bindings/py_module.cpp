// Python face of the library. Wrappers return plain strings and dicts so the
// module stays usable without any binding-side type knowledge.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

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

namespace py = pybind11;
using namespace topsnut;

namespace {

py::dict report_dict(const VerificationReport& rep) {
    py::dict out;
    out["pass"] = rep.pass();
    py::dict facts;
    for (const auto& [k, v] : rep.facts) facts[py::str(k)] = v;
    out["facts"] = facts;
    py::list viols;
    for (const auto& v : rep.violations) viols.append(v.clause + ": " + v.witness);
    out["violations"] = viols;
    return out;
}

TbPaw from_tokens(const std::vector<int>& xs) {
    TbPaw d;
    for (int x : xs) d.push_back(Token::num(x));
    return d;
}

}  // namespace

PYBIND11_MODULE(topsnut_py, m) {
    m.doc() = "labelled graphs, their matrices and text-based passwords";

    py::register_exception<Error>(m, "TopsnutError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def("add_vertex", &Graph::add_vertex)
        .def("add_edge", &Graph::add_edge)
        .def_property_readonly("p", &Graph::vertex_count)
        .def_property_readonly("q", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("connected", &Graph::connected)
        .def("is_tree", &Graph::is_tree)
        .def("edges", [](const Graph& g) {
            py::list out;
            for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
            return out;
        })
        .def("__repr__", [](const Graph& g) {
            return "Graph(p=" + std::to_string(g.vertex_count()) +
                   ", q=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("read_graph", &read_graph_file, py::arg("path"));
    m.def("write_graph", &write_graph_file, py::arg("path"), py::arg("graph"));
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("star_graph", &star_graph);
    m.def("caterpillar_graph", &caterpillar_graph);
    m.def("classify", [](const Graph& g) { return to_string(classify_tree(g).kind); });

    py::class_<Labelling>(m, "Labelling")
        .def(py::init<>())
        .def_readwrite("vertex", &Labelling::vertex)
        .def_readwrite("edge", &Labelling::edge);

    m.def("load_labelling", [](const std::string& path, const Graph& g) {
        Scheme sch;
        Labelling L = load_labelling(path, g, sch);
        return py::make_tuple(L, sch.name);
    });
    m.def("save_labelling",
          [](const std::string& path, const Graph& g, const Labelling& L,
             const std::string& scheme) {
              std::ofstream os(path);
              if (!os) fail("FileNotFound", path);
              Scheme sch;
              sch.name = scheme;
              write_labelling(os, g, L, sch);
          },
          py::arg("path"), py::arg("graph"), py::arg("labelling"), py::arg("scheme") = "none");

    m.def("verify", [](const Graph& g, const Labelling& L, const std::string& scheme) {
        Scheme sch;
        sch.name = scheme;
        return report_dict(verify(g, L, sch));
    });
    m.def("schemes", [] { return known_schemes(); });

    m.def("set_ordered_graceful", &construct_set_ordered_graceful_caterpillar);
    m.def("to_odd_graceful", &graceful_to_odd_graceful);
    m.def("image", &image_labelling);
    m.def("image_odd", &image_labelling_odd);
    m.def("dual", &dual_labelling);

    // matrix routes over a labelled graph
    m.def("route_string", [](const Graph& g, const Labelling& L, const std::string& route) {
        return extract_tbpaw(matrix_from_graph(g, L), route);
    }, py::arg("graph"), py::arg("labelling"), py::arg("route") = "rows");
    m.def("matrix_text", [](const Graph& g, const Labelling& L) {
        std::ostringstream os;
        write_matrix(os, matrix_from_graph(g, L));
        return os.str();
    });
    m.def("family_string", [](const Graph& g, const Labelling& L, int n, const std::string& route) {
        return tbpaw_group(matrix_from_graph(g, L), n, route);
    });

    // emitters, rendered
    m.def("vv_path", [](const Graph& g, const Labelling& L) { return render(emit_vv_path(g, L)); });
    m.def("vev_path",
          [](const Graph& g, const Labelling& L) { return render(emit_vev_path(g, L)); });
    m.def("vv_walk", [](const Graph& g, const Labelling& L, const std::vector<VertexId>& seq) {
        return render(emit_vv_walk(g, L, seq));
    });
    m.def("vev_walk", [](const Graph& g, const Labelling& L, const std::vector<VertexId>& seq) {
        return render(emit_vev_walk(g, L, seq));
    });
    m.def("vv_cycle", [](const Graph& g, const Labelling& L) { return render(emit_vv_cycle(g, L)); });
    m.def("vev_cycle",
          [](const Graph& g, const Labelling& L) { return render(emit_vev_cycle(g, L)); });
    m.def("hub_tour", [](const Graph& g, const Labelling& L) { return render(emit_vev_hub(g, L)); });
    m.def("meanings", [](const Graph& g, const Labelling& L) {
        std::vector<std::string> out;
        for (const TbPaw& d : multiple_meaning_emit(g, L)) out.push_back(render(d));
        return out;
    });

    // closed-form counts as decimal strings, factored headline as written
    m.def("count_strings", [](int q) { return tbpaw_count(q).str(); });
    m.def("count_matrices", [](int q) { return matrix_census_count(q).str(); });
    m.def("count_raw_pairs", [](int q) { return raw_pair_count(q).str(); });
    m.def("count_leaf_additions", [](int p, int mm) { return leaf_addition_count(p, mm).str(); });
    m.def("count_cycle_variants",
          [](const std::vector<int>& sizes) { return cycle_variant_count(sizes).str(); });
    m.def("headline", [](int q) { return headline_count(q).to_string(); });

    // groups
    py::class_<EveryZeroGraphicGroup>(m, "Group")
        .def_readonly("n", &EveryZeroGraphicGroup::n)
        .def("element", &EveryZeroGraphicGroup::element)
        .def("add", &EveryZeroGraphicGroup::add)
        .def("check", [](const EveryZeroGraphicGroup& grp) { return group_axiom_failures(grp); });
    m.def("load_group", &load_group);
    m.def("build_group", &build_group);

    // network encryption end to end
    m.def("encrypt_snapshot",
          [](const std::string& snapshot_path, const std::string& group_path, char algo,
             std::uint64_t seed) {
              long long t = 0;
              Graph snap = load_snapshot(snapshot_path, t);
              auto res = pipeline_encrypt(snap, t, load_group(group_path), algo, seed);
              py::dict out;
              out["t"] = res.timestep;
              out["tree_edges"] = res.tree.edge_count();
              out["blocks"] = res.net.blocks.size();
              out["joins"] = res.net.joins.size();
              out["total"] = res.emission.total;
              out["string"] = res.emission.rendered();
              return out;
          },
          py::arg("snapshot"), py::arg("group"), py::arg("algo") = 'A', py::arg("seed") = 1);

    // letter noise
    m.def("substitute", [](const std::vector<int>& tokens, const std::string& table) {
        return substitute(from_tokens(tokens), parse_substitution(table));
    });
    m.def("unsubstitute", [](const std::string& s, const std::string& table) {
        return unsubstitute(s, parse_substitution(table));
    });
    m.def("insert_letters", &insert_letters);
    m.def("strip_letters", &strip_letters);

    // connectivity quintuple of one graph
    m.def("split_report", [](const Graph& g) {
        py::dict out;
        auto vs = v_split_connectivity(g);
        out["kappa"] = vs.kappa;
        out["kappa_prime"] = kappa_prime(g);
        out["delta"] = g.min_degree();
        if (vs.gamma) out["gamma_vs"] = *vs.gamma;
        auto es = e_split_connectivity(g);
        if (es) out["gamma_es"] = *es;
        return out;
    });
    m.def("bridged_cliques", &bridged_cliques);
}
