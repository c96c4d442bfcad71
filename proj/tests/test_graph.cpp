#include <doctest.h>

#include "core/graph.hpp"
#include "test_helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

TEST_CASE("contract edge of K3 gives K2") {
    auto g = Graph::complete(3);
    auto r = contract_edge(g, VertexPair(0, 1));
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.vertex_map[0] == r.vertex_map[1]);
}

TEST_CASE("contract edge of K4 gives K3 with parallel edges merged") {
    auto g = Graph::k4();
    auto r = contract_edge(g, VertexPair(2, 3));
    CHECK(r.graph == Graph::complete(3));
}

TEST_CASE("contract pendant edge of P3 gives P2") {
    auto g = Graph::path(3);
    auto r = contract_edge(g, VertexPair(0, 1));
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 1);
}

TEST_CASE("contract_edge rejects non-edges") {
    auto g = Graph::path(3);
    CHECK_THROWS_AS(contract_edge(g, VertexPair(0, 2)), Error);
    try {
        contract_edge(g, VertexPair(0, 2));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EdgeNotFound);
    }
}

TEST_CASE("articulation vertices of a bowtie") {
    auto g = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto arts = g.articulation_vertices();
    REQUIRE(arts.size() == 1);
    CHECK(arts[0] == 2);
    CHECK(g.biconnected_blocks().size() == 2);
}

TEST_CASE("biconnected blocks of a path are its edges") {
    auto g = Graph::path(5);
    CHECK(g.biconnected_blocks().size() == 4);
}

TEST_CASE("components_without") {
    auto g = Graph::cycle(4);
    auto parts = g.components_without({0, 2});
    CHECK(parts.size() == 2);
}

TEST_CASE("k222 shape") {
    auto g = Graph::k222();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
}
