#include "topsnut/labelling.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "topsnut/error.hpp"

namespace topsnut {

std::vector<int> Labelling::vertex_values() const {
    std::vector<int> out;
    out.reserve(vertex.size());
    for (auto& [v, val] : vertex) out.push_back(val);
    return out;
}

std::vector<int> Labelling::edge_values() const {
    std::vector<int> out;
    out.reserve(edge.size());
    for (auto& [e, val] : edge) out.push_back(val);
    return out;
}

Labelling read_labelling(std::istream& in, const Graph& g, Scheme& scheme) {
    Labelling L;
    scheme = Scheme{};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "scheme") {
            if (!(ls >> scheme.name))
                fail("BadLabellingFile", "line " + std::to_string(lineno) + ": scheme name missing");
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    fail("BadLabellingFile", "scheme param '" + kv + "' is not key=value");
                scheme.params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
        } else if (head == "v") {
            int id, val;
            if (!(ls >> id >> val))
                fail("BadLabellingFile", "line " + std::to_string(lineno) + ": want 'v <id> <int>'");
            if (!g.has_vertex(id))
                fail("BadLabellingFile", "vertex " + std::to_string(id) + " not in graph");
            L.vertex[id] = val;
        } else if (head == "e") {
            int u, v, val;
            if (!(ls >> u >> v >> val))
                fail("BadLabellingFile", "line " + std::to_string(lineno) + ": want 'e <u> <v> <int>'");
            auto idx = g.edge_index(u, v);
            if (!idx)
                fail("BadLabellingFile",
                     "edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
            L.edge[*idx] = val;
        } else {
            fail("BadLabellingFile", "line " + std::to_string(lineno) + ": unknown head '" + head + "'");
        }
    }
    return L;
}

Labelling load_labelling(const std::string& path, const Graph& g, Scheme& scheme) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", path);
    return read_labelling(in, g, scheme);
}

void write_labelling(std::ostream& out, const Graph& g, const Labelling& L,
                     const Scheme& scheme) {
    out << "scheme " << (scheme.name.empty() ? "none" : scheme.name);
    for (auto& [k, v] : scheme.params) out << ' ' << k << '=' << v;
    out << '\n';
    for (auto& [v, val] : L.vertex) out << "v " << v << ' ' << val << '\n';
    for (auto& [e, val] : L.edge) {
        const Edge& ed = g.edge(e);
        out << "e " << ed.u << ' ' << ed.v << ' ' << val << '\n';
    }
}

void save_labelling(const std::string& path, const Graph& g, const Labelling& L,
                    const Scheme& scheme) {
    std::ofstream out(path);
    if (!out) fail("FileNotFound", path);
    write_labelling(out, g, L, scheme);
}

Labelling dual_labelling(const Labelling& L) {
    if (L.empty()) fail("EmptyLabelling", "dual of a labelling with no assigned values");
    bool first = true;
    int lo = 0, hi = 0;
    auto feed = [&](int v) {
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    };
    for (auto& [v, val] : L.vertex) feed(val);
    for (auto& [e, val] : L.edge) feed(val);
    Labelling out;
    for (auto& [v, val] : L.vertex) out.vertex[v] = hi + lo - val;
    for (auto& [e, val] : L.edge) out.edge[e] = hi + lo - val;
    return out;
}

void fill_difference_edges(const Graph& g, Labelling& L) {
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        auto u = L.vertex.find(e.u), v = L.vertex.find(e.v);
        if (u == L.vertex.end() || v == L.vertex.end())
            fail("MissingLabel", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " has an unlabelled endpoint");
        L.edge[i] = std::abs(u->second - v->second);
    }
}

}  // namespace topsnut
