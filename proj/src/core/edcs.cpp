#include "edcs.hpp"

#include <algorithm>
#include <cmath>

namespace ccs {

void Edcs::validate() const {
    if (dim != 2 && dim != 3) fail(ErrorCode::UnsupportedDimension, "dimension must be 2 or 3");
    if (weights.size() != static_cast<size_t>(graph.edge_count()))
        fail(ErrorCode::InvalidInput, "one weight per edge required");
    for (const auto& w : weights) {
        if (!std::isfinite(w.lo) || !std::isfinite(w.hi) || w.lo < 0.0)
            fail(ErrorCode::InvalidInput, "weights must be finite and nonnegative");
        if (w.lo > w.hi) fail(ErrorCode::BadInterval, "interval lower bound exceeds upper bound");
    }
    for (const auto& f : params) {
        if (f.u < 0 || f.v >= graph.vertex_count()) fail(ErrorCode::VertexNotFound, "parameter endpoint out of range");
        if (graph.has_edge(f.u, f.v)) fail(ErrorCode::BadParameterSet, "parameter pair is an edge");
    }
}

bool Edcs::all_point_weights() const {
    return std::none_of(weights.begin(), weights.end(), [](const Weight& w) { return w.is_interval(); });
}

Weight Edcs::weight_of(VertexPair e) const {
    const auto& edges = graph.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == e) return weights[i];
    fail(ErrorCode::EdgeNotFound, "weight_of: no such edge");
}

std::map<VertexPair, Weight> Edcs::weight_map() const {
    std::map<VertexPair, Weight> out;
    const auto& edges = graph.edges();
    for (size_t i = 0; i < edges.size(); ++i) out[edges[i]] = weights[i];
    return out;
}

Edcs make_edcs(Graph g, std::vector<Weight> weights, std::vector<VertexPair> params, int dim) {
    Edcs e{std::move(g), std::move(weights), std::move(params), dim};
    std::sort(e.params.begin(), e.params.end());
    e.validate();
    return e;
}

Edcs subdivide_for_intervals(const Edcs& e, bool strict, std::vector<SubdivisionRecord>* record) {
    e.validate();
    Edcs out;
    out.dim = e.dim;
    out.params = e.params;
    int n = e.graph.vertex_count();
    int extra = 0;
    for (size_t i = 0; i < e.weights.size(); ++i)
        if (strict || e.weights[i].is_interval()) ++extra;
    out.graph = Graph(n + extra);
    int next = n;
    const auto& edges = e.graph.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        const Weight& w = e.weights[i];
        if (strict || w.is_interval()) {
            int mid = next++;
            out.graph.add_edge(edges[i].u, mid);
            out.weights.push_back(Weight::point((w.hi - w.lo) / 2.0));
            out.graph.add_edge(mid, edges[i].v);
            out.weights.push_back(Weight::point((w.hi + w.lo) / 2.0));
            if (record) record->push_back({mid, edges[i]});
        } else {
            out.graph.add_edge(edges[i].u, edges[i].v);
            out.weights.push_back(w);
        }
    }
    return out;
}

} // namespace ccs
