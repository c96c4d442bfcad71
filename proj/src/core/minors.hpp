#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace ccs {

// Dense bitset graph for the search-heavy minor machinery (at most 64 vertices).
struct SmallGraph {
    int n = 0;
    std::vector<uint64_t> rows; // rows[v] = adjacency bitmask

    static SmallGraph from(const Graph& g);
    Graph to_graph() const;

    bool has_edge(int u, int v) const { return (rows[static_cast<size_t>(u)] >> v) & 1u; }
    void set_edge(int u, int v) {
        rows[static_cast<size_t>(u)] |= 1ull << v;
        rows[static_cast<size_t>(v)] |= 1ull << u;
    }
    int degree(int v) const;
    int edge_count() const;

    SmallGraph remove_vertex(int v) const;
    SmallGraph contract(int u, int v) const; // keeps u's slot, removes v
    SmallGraph remove_edge(int u, int v) const;

    // Canonical 64-bit key (exact up to isomorphism for small n; falls back to a
    // degree-refined hash beyond the exact bound).
    uint64_t canonical_key() const;
};

// True iff h is a minor of g. Exhaustive branch-and-prune with memoization.
// Throws MinorTargetTooLarge when h has more than 8 vertices.
bool has_minor(const Graph& g, const Graph& h);

// Branch sets of an h-minor model in g (indexed by h vertex), or nullopt.
// Each branch set is connected in g; sets are disjoint; every h edge is covered.
std::optional<std::vector<std::vector<int>>> find_minor_model(const Graph& g, const Graph& h);

} // namespace ccs
