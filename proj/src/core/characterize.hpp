#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "decompose.hpp"
#include "edcs.hpp"
#include "graph.hpp"

namespace ccs {

// The connected / convex / linear-polytope verdicts coincide, so one flag is
// stored and exposed three ways.
struct CharacterizationReport {
    bool flag = false;
    bool generically_complete = false;
    std::vector<DecompComponent> witnesses; // offending minimal components
    std::optional<std::vector<VertexPair>> suggested_params;

    bool always_single_interval() const { return flag; }
    bool always_convex() const { return flag; }
    bool always_linear_polytope() const { return flag; }
};

// True iff every minimal 2-sum component of g + f containing f is a partial
// 2-tree; offenders returned alongside.
std::pair<bool, std::vector<DecompComponent>> single_interval_nonedge(const Graph& g, VertexPair f);

// Theorem-level check for a whole parameter set F (all non-edges of g).
CharacterizationReport check_parameter_set(const Graph& g, const std::vector<VertexPair>& params);

// Does some 2-sum component of g admit an efficient space at all? Returns the
// 2-tree completion of the best candidate component as suggested parameters.
CharacterizationReport admits_efficient_space(const Graph& g);

// Interval-constraint variant: characterize on the subdivision of g + F in
// which interval edges are replaced by two-bar paths.
CharacterizationReport check_parameter_set_interval(const Edcs& e, const std::vector<VertexPair>& params,
                                                    bool strict_subdivision = false);

// Universally inherent connected/convex spaces: partial 2-tree test for d = 2,
// forbidden-minor 3-realizability test for d = 3.
bool universal_inherence(const Graph& h, int dim);

} // namespace ccs
