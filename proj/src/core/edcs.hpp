#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace ccs {

// Distance weight: a point value (lo == hi) or an interval [lo, hi].
struct Weight {
    double lo = 0.0;
    double hi = 0.0;

    static Weight point(double v) { return {v, v}; }
    static Weight interval(double l, double r) { return {l, r}; }
    bool is_interval() const { return hi > lo; }
    double value() const { return lo; } // for point weights
};

// Euclidean distance constraint system: graph + per-edge weights + the chosen
// Cayley parameter set (non-edges) + ambient dimension.
struct Edcs {
    Graph graph;
    std::vector<Weight> weights;      // parallel to graph.edges()
    std::vector<VertexPair> params;   // F, kept sorted
    int dim = 2;

    void validate() const;
    bool all_point_weights() const;
    Weight weight_of(VertexPair e) const;
    std::map<VertexPair, Weight> weight_map() const;
};

Edcs make_edcs(Graph g, std::vector<Weight> weights, std::vector<VertexPair> params, int dim);

struct SubdivisionRecord {
    int new_vertex;
    VertexPair original_edge;
};

// Replaces interval edges (u1,u2) with [l,r] by a two-bar path u1-u-u2 with
// bars (r-l)/2 and (r+l)/2. By default only genuine intervals are subdivided;
// strict mode subdivides every edge.
Edcs subdivide_for_intervals(const Edcs& e, bool strict = false, std::vector<SubdivisionRecord>* record = nullptr);

} // namespace ccs
