#include <doctest.h>

#include "core/minors.hpp"
#include "core/rng.hpp"
#include "test_helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

TEST_CASE("has_minor identity and size pruning") {
    CHECK(has_minor(Graph::k5(), Graph::k5()));
    CHECK_FALSE(has_minor(Graph::k4(), Graph::k5()));
}

TEST_CASE("K222 has a K4 minor") {
    CHECK(has_minor(Graph::k222(), Graph::k4()));
    CHECK(brute_force_has_minor(Graph::k222(), Graph::k4()));
}

TEST_CASE("K5 minus an edge has no K5 minor and no K222 minor") {
    auto g = Graph::k5();
    auto h = from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(has_minor(g, Graph::k5()));
    CHECK_FALSE(has_minor(h, Graph::k5()));
    CHECK_FALSE(has_minor(h, Graph::k222()));
}

TEST_CASE("minor target larger than 8 vertices is rejected") {
    CHECK_THROWS_AS(has_minor(Graph::complete(9), Graph::complete(9)), Error);
}

TEST_CASE("subdivisions preserve minors") {
    // K4 with every edge subdivided still has a K4 minor
    Graph g(10);
    int next = 4;
    auto k4 = Graph::k4();
    for (const auto& e : k4.edges()) {
        g.add_edge(e.u, next);
        g.add_edge(next, e.v);
        ++next;
    }
    CHECK(has_minor(g, Graph::k4()));
    CHECK_FALSE(has_minor(g, Graph::k5()));
}

TEST_CASE("has_minor agrees with brute force on small random graphs") {
    Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3)); // 4..6
        Graph g = random_connected_graph(n, static_cast<int>(rng.below(5)), rng);
        for (const Graph& h : {Graph::k4(), Graph::complete(3)}) {
            CHECK(has_minor(g, h) == brute_force_has_minor(g, h));
        }
    }
}

TEST_CASE("find_minor_model returns a valid model") {
    auto model = find_minor_model(Graph::k222(), Graph::k4());
    REQUIRE(model.has_value());
    CHECK(model->size() == 4);
    // disjointness
    std::vector<int> seen(6, 0);
    for (const auto& set : *model)
        for (int v : set) {
            CHECK(seen[static_cast<size_t>(v)] == 0);
            seen[static_cast<size_t>(v)] = 1;
        }
    // cross edges exist for every K4 edge
    auto g = Graph::k222();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool found = false;
            for (int a : (*model)[static_cast<size_t>(i)])
                for (int b : (*model)[static_cast<size_t>(j)])
                    if (g.has_edge(a, b)) found = true;
            CHECK(found);
        }
}
