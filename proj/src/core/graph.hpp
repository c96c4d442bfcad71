#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ccs {

// Unordered vertex pair, stored with u < v.
struct VertexPair {
    int u = -1;
    int v = -1;

    VertexPair() = default;
    VertexPair(int a, int b) {
        if (a == b) fail(ErrorCode::InvalidInput, "vertex pair endpoints must differ");
        u = a < b ? a : b;
        v = a < b ? b : a;
    }

    auto operator<=>(const VertexPair&) const = default;
};

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel edges.
class Graph {
public:
    explicit Graph(int n = 0) : adj_(static_cast<size_t>(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_vertex() { adj_.emplace_back(); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    const std::vector<VertexPair>& edges() const { return edges_; }

    bool connected() const;
    std::vector<std::vector<int>> connected_components() const;

    // Components of the graph with `removed` vertices taken out (removed must be sorted small).
    std::vector<std::vector<int>> components_without(const std::vector<int>& removed) const;

    std::vector<int> articulation_vertices() const;

    // Vertex sets of the biconnected blocks (bridges and K2 blocks included).
    // Isolated vertices appear as singleton blocks.
    std::vector<std::vector<int>> biconnected_blocks() const;

    // Subgraph induced on `verts`; old_to_new (if given) maps original id -> new id or -1.
    Graph induced(const std::vector<int>& verts, std::vector<int>* old_to_new = nullptr) const;

    bool operator==(const Graph& other) const;

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph k4() { return complete(4); }
    static Graph k5() { return complete(5); }
    // Complete tripartite K_{2,2,2} on parts {0,1},{2,3},{4,5}.
    static Graph k222();

private:
    std::vector<std::vector<int>> adj_;
    std::vector<VertexPair> edges_;
};

struct ContractionResult {
    Graph graph;
    std::vector<int> vertex_map; // old id -> new id
};

// Contracts edge e, keeping the lower endpoint's identity. Parallel edges merge,
// the self-loop is dropped.
ContractionResult contract_edge(const Graph& g, VertexPair e);

// Graph plus one extra edge (which must not already exist).
Graph with_edge(const Graph& g, VertexPair f);
Graph with_edges(const Graph& g, const std::vector<VertexPair>& fs);

} // namespace ccs
