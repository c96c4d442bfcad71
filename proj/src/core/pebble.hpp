#pragma once

#include <string>

#include "graph.hpp"

namespace ccs {

enum class LamanTag {
    Underconstrained,           // independent, not rigid
    Wellconstrained,            // independent, rigid (minimally rigid)
    Overconstrained,            // dependent, rigid
    FlexibleWithOverconstraint, // dependent, not rigid
};

const char* laman_tag_name(LamanTag tag);

struct LamanReport {
    LamanTag tag;
    int dof;  // 2|V| - 3 - rank
    int rank;
    bool independent;
    bool rigid;
};

// (2,3)-pebble game classification. Requires |V| >= 2.
LamanReport laman_classify(const Graph& g);

} // namespace ccs
