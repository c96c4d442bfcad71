#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/pebble.hpp"
#include "core/rng.hpp"
#include "test_helpers.hpp"

using namespace ccs;
using namespace ccs::testing;

namespace {

// Numeric rank of the rigidity matrix at a random (generic) realization.
int rigidity_rank(const Graph& g, Rng& rng) {
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<std::array<double, 2>> p(static_cast<size_t>(n));
    for (auto& q : p) q = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    std::vector<std::vector<double>> a(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(2 * n), 0.0));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[static_cast<size_t>(e)];
        a[static_cast<size_t>(e)][static_cast<size_t>(2 * u)] = p[static_cast<size_t>(u)][0] - p[static_cast<size_t>(v)][0];
        a[static_cast<size_t>(e)][static_cast<size_t>(2 * u + 1)] = p[static_cast<size_t>(u)][1] - p[static_cast<size_t>(v)][1];
        a[static_cast<size_t>(e)][static_cast<size_t>(2 * v)] = p[static_cast<size_t>(v)][0] - p[static_cast<size_t>(u)][0];
        a[static_cast<size_t>(e)][static_cast<size_t>(2 * v + 1)] = p[static_cast<size_t>(v)][1] - p[static_cast<size_t>(u)][1];
    }
    int rank = 0;
    for (int col = 0; col < 2 * n && rank < m; ++col) {
        int pivot = -1;
        double best = 1e-9;
        for (int r = rank; r < m; ++r)
            if (std::abs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) > best) {
                best = std::abs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(pivot)]);
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            double factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] / a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            if (factor == 0.0) continue;
            for (int c = col; c < 2 * n; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("laman classification examples") {
    auto k3 = laman_classify(Graph::complete(3));
    CHECK(k3.tag == LamanTag::Wellconstrained);
    CHECK(k3.dof == 0);

    auto p3 = laman_classify(Graph::path(3));
    CHECK(p3.tag == LamanTag::Underconstrained);
    CHECK(p3.dof == 1);

    auto k4 = laman_classify(Graph::k4());
    CHECK(k4.tag == LamanTag::Overconstrained);
    CHECK(k4.rigid);
    CHECK_FALSE(k4.independent);
    CHECK(k4.rank == 5);

    CHECK_THROWS_AS(laman_classify(Graph(1)), Error);
}

TEST_CASE("pebble game rank matches rigidity matrix rank at random realizations") {
    Rng rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5)); // 2..6
        Graph g = random_connected_graph(n, static_cast<int>(rng.below(6)), rng);
        auto report = laman_classify(g);
        CHECK(report.rank == rigidity_rank(g, rng));
    }
}

TEST_CASE("2-trees are wellconstrained") {
    Rng rng(17);
    for (int n : {3, 6, 12, 30}) {
        auto report = laman_classify(random_two_tree(n, rng));
        CHECK(report.tag == LamanTag::Wellconstrained);
        CHECK(report.dof == 0);
    }
}
