#pragma once

#include <vector>

#include "graph.hpp"

namespace ccs {

struct DecompComponent {
    std::vector<int> vertices;      // sorted original vertex ids
    std::vector<VertexPair> edges;  // original ids
    std::vector<char> shared_copy;  // per edge: duplicate of a split label owned by another component

    Graph as_graph(std::vector<int>* old_to_new = nullptr) const;
    bool contains_pair(VertexPair p) const;
    bool has_component_edge(VertexPair p) const;
};

// Adjacency between components: label_v == -1 marks an articulation (1-sum)
// label, otherwise (label_u, label_v) is the shared 2-sum edge.
struct DecompLink {
    int a, b;
    int label_u, label_v;
};

struct TwoSumDecomposition {
    std::vector<DecompComponent> components;
    std::vector<DecompLink> links;
    std::vector<char> minimal_flags; // per component; always true for full decompositions
};

// Full recursive decomposition at articulation vertices and at separation
// pairs {a,b} with (a,b) an edge. Input must be connected.
TwoSumDecomposition two_sum_decompose(const Graph& g);

// Decomposition that splits only at separation pairs {a,b} with (a,b) an edge
// (no articulation splits). Works per connected component.
TwoSumDecomposition two_sum_decompose_edges_only(const Graph& g);

// Per-connected-component decomposition; isolated vertices become K1 leaves.
TwoSumDecomposition decompose_all(const Graph& g);

// Minimal 2-sum components of g that contain both endpoints of f (the
// f-preserving decomposition; f may be an edge or a non-edge of g).
std::vector<DecompComponent> minimal_components_containing(const Graph& g, VertexPair f);

} // namespace ccs
