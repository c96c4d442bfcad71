#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace ccs {

// True iff g has no K4 minor, via series-parallel reduction per connected
// component (delete isolated/degree-1 vertices, suppress degree-2 vertices
// merging parallel edges) until empty or stuck.
bool is_partial_two_tree(const Graph& g);

// One elimination step of a width-k construction: vertex `v` was attached to
// the already-built part through `base` (k vertices forming a clique there).
struct EliminationStep {
    int v;
    std::vector<int> base;
};

struct KTreeCompletion {
    std::vector<VertexPair> fill;           // non-edges added; empty iff g is already a k-tree
    std::vector<EliminationStep> order;     // elimination order of g + fill (reverse = construction)
    std::vector<int> seed;                  // the vertices left after elimination (root clique)
};

// Completes g to a k-tree (k = 2 or 3) by greedy fill-in; deterministic
// (lowest-canonical candidates first). Throws NotPartialKTree when impossible.
// K_m with m <= k is accepted as a degenerate k-tree.
KTreeCompletion complete_to_k_tree_full(const Graph& g, int k);

// Just the fill set (spec-facing operation).
std::vector<VertexPair> complete_to_k_tree(const Graph& g, int k);

bool is_partial_k_tree(const Graph& g, int k);
bool is_k_tree(const Graph& g, int k);

// True iff g has neither K5 nor K2,2,2 as a minor.
bool is_three_realizable(const Graph& g);

} // namespace ccs
