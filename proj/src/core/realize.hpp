#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "edcs.hpp"
#include "geometry.hpp"
#include "graph.hpp"

namespace ccs {

struct Realization {
    int dim = 2;
    std::vector<Vec3> points;  // indexed by vertex id
    std::vector<int> branches; // +1/-1 per two-solution placement, in placement order
};

struct BranchNode {
    int vertex;
    int multiplicity; // 0, 1 or 2 geometric solutions at this placement
};

struct BranchTree {
    std::vector<BranchNode> nodes;
    long long leaf_count = 0;
};

// Sequential placement problem: place every vertex of `graph` so that each
// `fixed` distance holds within tol. `sweep` edges have no required value;
// the builder grids them over their conditional feasible interval when a
// vertex cannot be pinned otherwise (used by the oracle).
struct BuildProblem {
    const Graph* graph = nullptr;
    int dim = 2;
    std::map<VertexPair, double> fixed;
    std::vector<VertexPair> sweep;
    int grid = 1;             // samples per swept interval
    double sweep_bound = 1.0; // upper bound when a swept interval is unbounded
    double tol = 1e-9;
};

struct BuildLeaf {
    const std::vector<Vec3>& points;
    const std::vector<int>& branches;
    const std::map<VertexPair, double>& aux_values; // swept values in effect
};

// Enumerates feasible placements. The visitor returns false to stop early.
// `follow` (when set) pins each two-solution placement to the given sign
// instead of branching. Returns the branch tree of the traversal. Throws
// OracleInapplicable when some vertex can neither be pinned nor swept.
BranchTree build_enumerate(const BuildProblem& problem, const std::function<bool(const BuildLeaf&)>& visit,
                           const std::vector<int>* follow = nullptr);

// Ruler-and-compass construction of a k-tree EDCS (k = dim); canonical frame,
// branch choices default to +1. Throws NotRealizable with the failing vertex.
Realization realize_k_tree(const Edcs& e, const std::vector<int>& branches = {});

// Realizes an arbitrary point of the Cayley configuration space: parameter
// values from `config` (auxiliary completion pairs filled in by the midpoint
// rule when missing), components hinged along the 2-sum tree. Components that
// are not 2-tree constructible are read off `base`.
Realization realize_from_config(const Edcs& e, const std::map<VertexPair, double>& config,
                                const Realization* base = nullptr);

// Depth-first enumeration over reflection choices, deduplicated modulo the
// canonical frame; stops after `cap` realizations (flagged truncated).
struct BranchEnumeration {
    std::vector<Realization> realizations;
    BranchTree tree;
    bool truncated = false;
};
BranchEnumeration enumerate_branches(const Edcs& e, int cap);

struct VerifyReport {
    double max_error = 0.0;
    double mean_error = 0.0;
    bool pass = false;
};

// Per-edge distance errors of a realization; interval edges are checked
// against [lo - tol, hi + tol].
VerifyReport verify_realization(const Realization& r, const Edcs& e, double tol);

} // namespace ccs
