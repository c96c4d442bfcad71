#include <doctest.h>

#include <algorithm>

#include "core/ktree.hpp"
#include "core/minors.hpp"
#include "core/rng.hpp"
#include "test_helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

TEST_CASE("partial 2-tree recognition basics") {
    CHECK(is_partial_two_tree(Graph::complete(3)));
    CHECK_FALSE(is_partial_two_tree(Graph::k4()));
    // two triangles sharing an edge
    auto g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK(is_partial_two_tree(g));
    CHECK(is_partial_two_tree(Graph::cycle(6)));
    CHECK(is_partial_two_tree(Graph(0)));
}

TEST_CASE("partial 2-tree equals absence of K4 minor on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(is_partial_two_tree(g) == !has_minor(g, Graph::k4()));
        }
    }
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(7, static_cast<int>(rng.below(8)), rng);
        CHECK(is_partial_two_tree(g) == !has_minor(g, Graph::k4()));
    }
}

TEST_CASE("complete_to_k_tree examples") {
    CHECK(complete_to_k_tree(Graph::path(3), 2) == std::vector<VertexPair>{VertexPair(0, 2)});
    CHECK(complete_to_k_tree(Graph::complete(3), 2).empty());
    CHECK(complete_to_k_tree(Graph::cycle(4), 2) == std::vector<VertexPair>{VertexPair(0, 2)});
    CHECK_THROWS_AS(complete_to_k_tree(Graph::k4(), 2), Error);
}

TEST_CASE("two-tree completion yields a 2-tree") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng.below(8));
        Graph t = random_two_tree(n, rng);
        // drop random edges, keep the graph arbitrary partial 2-tree (possibly disconnected)
        Graph g(n);
        for (const auto& e : t.edges())
            if (rng.next_double() > 0.3) g.add_edge(e.u, e.v);
        auto fill = complete_to_k_tree(g, 2);
        Graph completed = with_edges(g, fill);
        CHECK(is_k_tree(completed, 2));
    }
}

TEST_CASE("is_k_tree") {
    CHECK(is_k_tree(Graph::complete(3), 2));
    CHECK_FALSE(is_k_tree(Graph::k4(), 2));
    CHECK_FALSE(is_k_tree(Graph::cycle(4), 2));
    CHECK(is_k_tree(Graph::complete(4), 3));
    Rng rng(5);
    CHECK(is_k_tree(random_two_tree(9, rng), 2));
    CHECK(is_k_tree(random_three_tree(9, rng), 3));
}

TEST_CASE("three-tree completion") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng.below(6));
        Graph t = random_three_tree(n, rng);
        Graph g(n);
        for (const auto& e : t.edges())
            if (rng.next_double() > 0.25) g.add_edge(e.u, e.v);
        auto fill = complete_to_k_tree(g, 3);
        CHECK(is_k_tree(with_edges(g, fill), 3));
    }
    CHECK_THROWS_AS(complete_to_k_tree(Graph::k5(), 3), Error);
    CHECK(complete_to_k_tree(Graph::complete(4), 3).empty());
}

TEST_CASE("three-realizability") {
    CHECK_FALSE(is_three_realizable(Graph::k222()));
    CHECK_FALSE(is_three_realizable(Graph::k5()));
    Rng rng(13);
    for (int n = 4; n <= 8; ++n) CHECK(is_three_realizable(random_three_tree(n, rng)));
    auto k5_minus = from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(is_three_realizable(k5_minus));
}
