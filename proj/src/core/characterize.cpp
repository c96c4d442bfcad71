#include "characterize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ktree.hpp"
#include "pebble.hpp"

namespace ccs {

std::pair<bool, std::vector<DecompComponent>> single_interval_nonedge(const Graph& g, VertexPair f) {
    if (f.u < 0 || f.v >= g.vertex_count()) fail(ErrorCode::VertexNotFound, "non-edge endpoint out of range");
    if (g.has_edge(f.u, f.v)) fail(ErrorCode::NotANonEdge, "f must be a non-edge");
    Graph h = with_edge(g, f);
    std::vector<DecompComponent> offenders;
    for (auto& comp : minimal_components_containing(h, f))
        if (!is_partial_two_tree(comp.as_graph())) offenders.push_back(std::move(comp));
    return {offenders.empty(), std::move(offenders)};
}

CharacterizationReport check_parameter_set(const Graph& g, const std::vector<VertexPair>& params) {
    if (params.empty()) fail(ErrorCode::BadParameterSet, "parameter set must be nonempty");
    for (const auto& f : params) {
        if (f.u < 0 || f.v >= g.vertex_count()) fail(ErrorCode::VertexNotFound, "parameter endpoint out of range");
        if (g.has_edge(f.u, f.v)) fail(ErrorCode::BadParameterSet, "parameter pair is an edge of g");
    }
    std::set<VertexPair> fset(params.begin(), params.end());
    if (fset.size() != params.size()) fail(ErrorCode::BadParameterSet, "duplicate parameter pair");

    Graph h = with_edges(g, params);
    CharacterizationReport report;
    report.flag = true;

    auto contains_param = [&](const DecompComponent& c) {
        return std::any_of(c.edges.begin(), c.edges.end(), [&](const VertexPair& e) { return fset.count(e) > 0; });
    };

    auto full = decompose_all(h);
    for (auto& comp : full.components) {
        if (!contains_param(comp)) continue;
        if (!is_partial_two_tree(comp.as_graph())) {
            report.flag = false;
            report.witnesses.push_back(comp);
        }
    }

    // Generic completeness takes proper 2-sum components (splits along edges
    // only): 1-sum hinges must surface as underconstrained pieces.
    if (report.flag) {
        bool gc = true;
        for (const auto& comp : two_sum_decompose_edges_only(g).components) {
            if (comp.vertices.size() < 2) continue;
            Graph cg = comp.as_graph();
            if (laman_classify(cg).tag == LamanTag::Underconstrained && !is_partial_two_tree(cg)) gc = false;
        }
        for (const auto& comp : two_sum_decompose_edges_only(h).components) {
            if (!contains_param(comp)) continue;
            if (!is_k_tree(comp.as_graph(), 2)) gc = false;
        }
        report.generically_complete = gc;
    }
    return report;
}

CharacterizationReport admits_efficient_space(const Graph& g) {
    CharacterizationReport report;
    auto d = decompose_all(g);
    size_t m = d.components.size();

    std::vector<char> good(m, 0);
    for (size_t i = 0; i < m; ++i) good[i] = is_partial_two_tree(d.components[i].as_graph()) ? 1 : 0;
    std::vector<std::vector<int>> adj(m);
    for (const auto& l : d.links) {
        if (good[static_cast<size_t>(l.a)] && good[static_cast<size_t>(l.b)]) {
            adj[static_cast<size_t>(l.a)].push_back(l.b);
            adj[static_cast<size_t>(l.b)].push_back(l.a);
        }
    }

    // maximal connected groups of partial-2-tree leaves; their unions are the
    // candidate 2-sum components
    std::vector<int> group(m, -1);
    int group_count = 0;
    for (size_t s = 0; s < m; ++s) {
        if (!good[s] || group[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        group[s] = group_count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(v)])
                if (group[static_cast<size_t>(w)] < 0) {
                    group[static_cast<size_t>(w)] = group_count;
                    stack.push_back(w);
                }
        }
        ++group_count;
    }

    struct Candidate {
        std::vector<int> vertices;
        std::vector<VertexPair> edges;
        int min_vertex;
    };
    std::optional<Candidate> best;
    for (int gi = 0; gi < group_count; ++gi) {
        std::set<int> verts;
        std::set<VertexPair> edges;
        for (size_t i = 0; i < m; ++i) {
            if (group[i] != gi) continue;
            verts.insert(d.components[i].vertices.begin(), d.components[i].vertices.end());
            edges.insert(d.components[i].edges.begin(), d.components[i].edges.end());
        }
        if (verts.size() < 3) continue;
        Candidate c{{verts.begin(), verts.end()}, {edges.begin(), edges.end()}, *verts.begin()};
        DecompComponent comp{c.vertices, c.edges, {}};
        Graph cg = comp.as_graph();
        if (laman_classify(cg).tag != LamanTag::Underconstrained) continue;
        if (!best || c.min_vertex < best->min_vertex) best = std::move(c);
    }

    if (!best) {
        report.flag = false;
        return report;
    }
    DecompComponent comp{best->vertices, best->edges, {}};
    std::vector<int> old_to_new;
    Graph cg = comp.as_graph(&old_to_new);
    auto fill = complete_to_k_tree(cg, 2);
    std::vector<VertexPair> suggested;
    for (const auto& e : fill)
        suggested.emplace_back(best->vertices[static_cast<size_t>(e.u)], best->vertices[static_cast<size_t>(e.v)]);
    std::sort(suggested.begin(), suggested.end());

    auto refined = check_parameter_set(g, suggested);
    report.flag = true;
    report.generically_complete = refined.generically_complete;
    report.suggested_params = std::move(suggested);
    return report;
}

CharacterizationReport check_parameter_set_interval(const Edcs& e, const std::vector<VertexPair>& params,
                                                    bool strict_subdivision) {
    e.validate();
    if (!e.graph.connected())
        fail(ErrorCode::GraphNotConnected, "interval characterization requires a connected graph");
    Edcs sub = subdivide_for_intervals(e, strict_subdivision);
    return check_parameter_set(sub.graph, params);
}

bool universal_inherence(const Graph& h, int dim) {
    if (dim == 2) return is_partial_two_tree(h);
    if (dim == 3) return is_three_realizable(h);
    fail(ErrorCode::UnsupportedDimension, "universal inherence is defined for d = 2 or 3");
}

} // namespace ccs
