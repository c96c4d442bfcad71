#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace ccs {

// One contraction: the absorbed class is merged into the survivor class.
// Both ids are class representatives valid at replay time; the classes must be
// adjacent in the current quotient.
struct ContractionStep {
    int survivor;
    int absorbed;
    bool operator==(const ContractionStep&) const = default;
};

struct ContractionSequence {
    std::vector<ContractionStep> steps;
};

struct ReplayResult {
    Graph minor;                 // quotient graph (compacted ids, ascending class reps)
    std::vector<int> vertex_map; // original id -> quotient id (-1 for removed classes)
};

// Replays steps on g; throws EdgeNotFound when a step names a non-adjacent
// class pair. Classes of `removed_isolated` ids are dropped afterwards and
// must be isolated in the quotient.
ReplayResult replay_contractions(const Graph& g, const ContractionSequence& seq,
                                 const std::vector<int>& removed_isolated = {});

// Role labeling of the two base-case graphs relative to the non-edge f:
// Base Case 1 is K4 minus f on {v1,v2,w1,w2}; Base Case 2 additionally has
// degree-2 vertices u_1..u_m adjacent to both v1 and v2.
struct BaseCaseRoles {
    int v1, v2, w1, w2;
    std::vector<int> us;
};
std::optional<BaseCaseRoles> classify_base_case(const Graph& g, VertexPair f);

// Contraction-only reduction of g to Base Case 1 or 2, keeping f's endpoints
// distinct and non-adjacent. Absent exactly when every minimal 2-sum component
// of g + f containing f is a partial 2-tree. Requires g connected.
std::optional<ContractionSequence> restricted_contraction_reduction(const Graph& g, VertexPair f);

// Independent exhaustive search over restricted contraction sequences
// (verification oracle; bounded to 12 vertices).
bool exhaustive_restricted_reducible(const Graph& g, VertexPair f);

struct K5K222Reduction {
    ContractionSequence seq;
    std::vector<int> removed_isolated;
    bool target_is_k5;
};

// Contraction-only reduction to exactly K5 or K2,2,2 (with isolated-vertex
// removals recorded); absent iff g is 3-realizable.
std::optional<K5K222Reduction> contraction_reduction_to_k5_or_k222(const Graph& g);

} // namespace ccs
