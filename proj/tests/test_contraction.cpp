#include <doctest.h>

#include "core/contraction.hpp"
#include "core/decompose.hpp"
#include "core/ktree.hpp"
#include "core/minors.hpp"
#include "core/rng.hpp"
#include "test_helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

namespace {

bool presence_by_definition(const Graph& g, VertexPair f) {
    Graph h = with_edge(g, f);
    for (const auto& comp : minimal_components_containing(h, f))
        if (!is_partial_two_tree(comp.as_graph())) return true;
    return false;
}

void check_sequence_valid(const Graph& g, VertexPair f, const ContractionSequence& seq) {
    auto r = replay_contractions(g, seq);
    int m1 = r.vertex_map[static_cast<size_t>(f.u)], m2 = r.vertex_map[static_cast<size_t>(f.v)];
    CHECK(m1 != m2);
    CHECK_FALSE(r.minor.has_edge(m1, m2));
    CHECK(classify_base_case(r.minor, VertexPair(m1, m2)).has_value());
}

} // namespace

TEST_CASE("base case classification") {
    CHECK(classify_base_case(k4_minus_f(), VertexPair(0, 1)).has_value());
    CHECK_FALSE(classify_base_case(k4_minus_f(), VertexPair(0, 2)).has_value());
    // Base Case 2 with two u-vertices
    auto bc2 = from_edges(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}});
    auto roles = classify_base_case(bc2, VertexPair(0, 1));
    REQUIRE(roles.has_value());
    CHECK(roles->us.size() == 2);
    CHECK(roles->w1 == 2);
    CHECK(roles->w2 == 3);
    CHECK_FALSE(classify_base_case(Graph::path(4), VertexPair(0, 3)).has_value());
}

TEST_CASE("replay validates steps") {
    auto g = Graph::path(3);
    ContractionSequence bad{{{0, 2}}};
    CHECK_THROWS_AS(replay_contractions(g, bad), Error);
    ContractionSequence ok{{{0, 1}, {0, 2}}};
    auto r = replay_contractions(g, ok);
    CHECK(r.minor.vertex_count() == 1);
}

TEST_CASE("restricted reduction on the base case itself is empty") {
    auto seq = restricted_contraction_reduction(k4_minus_f(), VertexPair(0, 1));
    REQUIRE(seq.has_value());
    CHECK(seq->steps.empty());
}

TEST_CASE("restricted reduction of a subdivided base case uses one contraction") {
    // subdivide (0,2) of K4-minus-f through vertex 4
    auto g = from_edges(5, {{0, 4}, {4, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto seq = restricted_contraction_reduction(g, VertexPair(0, 1));
    REQUIRE(seq.has_value());
    CHECK(seq->steps.size() == 1);
    check_sequence_valid(g, VertexPair(0, 1), *seq);
}

TEST_CASE("P3 admits no reduction") {
    CHECK_FALSE(restricted_contraction_reduction(Graph::path(3), VertexPair(0, 2)).has_value());
    CHECK_FALSE(exhaustive_restricted_reducible(Graph::path(3), VertexPair(0, 2)));
}

TEST_CASE("restricted reduction rejects edges as f") {
    CHECK_THROWS_AS(restricted_contraction_reduction(Graph::k4(), VertexPair(0, 1)), Error);
}

TEST_CASE("theorem equivalence on all connected graphs with up to 5 vertices") {
    for (int n = 4; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!g.connected()) continue;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    VertexPair f(u, v);
                    bool expect = presence_by_definition(g, f);
                    auto seq = restricted_contraction_reduction(g, f);
                    CHECK(seq.has_value() == expect);
                    CHECK(exhaustive_restricted_reducible(g, f) == expect);
                    if (seq) check_sequence_valid(g, f, *seq);
                }
        }
    }
}

TEST_CASE("theorem equivalence on random 6-vertex graphs") {
    Rng rng(606);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_connected_graph(6, static_cast<int>(rng.below(8)), rng);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) {
                if (g.has_edge(u, v)) continue;
                VertexPair f(u, v);
                bool expect = presence_by_definition(g, f);
                auto seq = restricted_contraction_reduction(g, f);
                CHECK(seq.has_value() == expect);
                if (seq) check_sequence_valid(g, f, *seq);
            }
    }
}

TEST_CASE("K5 and K222 reduce to themselves") {
    auto r5 = contraction_reduction_to_k5_or_k222(Graph::k5());
    REQUIRE(r5.has_value());
    CHECK(r5->target_is_k5);
    CHECK(r5->seq.steps.empty());

    auto r222 = contraction_reduction_to_k5_or_k222(Graph::k222());
    REQUIRE(r222.has_value());
    CHECK_FALSE(r222->target_is_k5);
    CHECK(r222->seq.steps.empty());
}

TEST_CASE("subdivided K222 reduces with one contraction") {
    auto base = Graph::k222();
    Graph g(7);
    for (const auto& e : base.edges()) {
        if (e == VertexPair(0, 2)) {
            g.add_edge(0, 6);
            g.add_edge(6, 2);
        } else {
            g.add_edge(e.u, e.v);
        }
    }
    auto r = contraction_reduction_to_k5_or_k222(g);
    REQUIRE(r.has_value());
    CHECK_FALSE(r->target_is_k5);
    CHECK(r->seq.steps.size() == 1);
    auto replayed = replay_contractions(g, r->seq, r->removed_isolated);
    CHECK(SmallGraph::from(replayed.minor).canonical_key() == SmallGraph::from(Graph::k222()).canonical_key());
}

TEST_CASE("absence of reduction equals 3-realizability") {
    Rng rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 5 + static_cast<int>(rng.below(3)); // 5..7
        Graph g = random_connected_graph(n, static_cast<int>(rng.below(10)), rng);
        bool three_r = is_three_realizable(g);
        auto r = contraction_reduction_to_k5_or_k222(g);
        CHECK(r.has_value() == !three_r);
        if (r) {
            auto replayed = replay_contractions(g, r->seq, r->removed_isolated);
            Graph target = r->target_is_k5 ? Graph::k5() : Graph::k222();
            CHECK(SmallGraph::from(replayed.minor).canonical_key() == SmallGraph::from(target).canonical_key());
        }
    }
}
