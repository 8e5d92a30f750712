#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "topsnut/graph.hpp"

namespace topsnut {

// Family tag plus numeric parameters (k, d, c, ...). The name selects the
// clause set used by verify().
struct Scheme {
    std::string name;
    std::map<std::string, long long> params;

    long long param(const std::string& key, long long fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return params.count(key) != 0; }
};

// Integer labels on a subset of vertices and edges. Edge keys are indices
// into Graph::edges(), so the labelling is only meaningful next to its graph.
struct Labelling {
    std::map<VertexId, int> vertex;
    std::map<int, int> edge;

    std::vector<int> vertex_values() const;
    std::vector<int> edge_values() const;
    bool empty() const { return vertex.empty() && edge.empty(); }
};

struct Violation {
    std::string clause;
    std::string witness;
};

struct VerificationReport {
    std::vector<Violation> violations;
    std::map<std::string, long long> facts;

    bool pass() const { return violations.empty(); }
    void fail(const std::string& clause, const std::string& witness) {
        violations.push_back({clause, witness});
    }
    void note(const std::string& key, long long value) { facts[key] = value; }
};

// --- file format: header "scheme <name> [key=value ...]", then lines
// "v <id> <int>" and "e <u> <v> <int>"; '#' comments and blanks ok
Labelling read_labelling(std::istream& in, const Graph& g, Scheme& scheme);
Labelling load_labelling(const std::string& path, const Graph& g, Scheme& scheme);
void write_labelling(std::ostream& out, const Graph& g, const Labelling& L,
                     const Scheme& scheme);
void save_labelling(const std::string& path, const Graph& g, const Labelling& L,
                    const Scheme& scheme);

// h'(z) = max + min - h(z) over the combined assigned domain; involution.
Labelling dual_labelling(const Labelling& L);

// recompute edge labels as |f(u)-f(v)| for every edge of g
void fill_difference_edges(const Graph& g, Labelling& L);

VerificationReport verify(const Graph& g, const Labelling& L, const Scheme& scheme);

const std::vector<std::string>& known_schemes();

}  // namespace topsnut
