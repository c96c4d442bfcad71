#include "pebble.hpp"

#include <algorithm>
#include <numeric>

#include "ktree.hpp"

namespace ccs {

const char* laman_tag_name(LamanTag tag) {
    switch (tag) {
        case LamanTag::Underconstrained: return "underconstrained";
        case LamanTag::Wellconstrained: return "wellconstrained";
        case LamanTag::Overconstrained: return "overconstrained";
        case LamanTag::FlexibleWithOverconstraint: return "flexible-with-overconstraint";
    }
    return "unknown";
}

namespace {

struct PebbleGame {
    int n;
    std::vector<int> pebbles;
    std::vector<std::vector<int>> out; // oriented accepted edges
    std::vector<int> stamp;
    std::vector<int> prev;
    int clock = 0;

    explicit PebbleGame(int n_) : n(n_), pebbles(static_cast<size_t>(n_), 2), out(static_cast<size_t>(n_)),
                                  stamp(static_cast<size_t>(n_), 0), prev(static_cast<size_t>(n_), -1) {}

    void reverse_edge(int a, int b) {
        auto& oa = out[static_cast<size_t>(a)];
        oa.erase(std::find(oa.begin(), oa.end(), b));
        out[static_cast<size_t>(b)].push_back(a);
    }

    // Move one pebble to x by a directed search avoiding `avoid`.
    bool pull_pebble(int x, int avoid) {
        ++clock;
        stamp[static_cast<size_t>(x)] = clock;
        prev[static_cast<size_t>(x)] = -1;
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : out[static_cast<size_t>(v)]) {
                if (w == avoid || stamp[static_cast<size_t>(w)] == clock) continue;
                stamp[static_cast<size_t>(w)] = clock;
                prev[static_cast<size_t>(w)] = v;
                if (pebbles[static_cast<size_t>(w)] > 0) {
                    --pebbles[static_cast<size_t>(w)];
                    ++pebbles[static_cast<size_t>(x)];
                    for (int c = w; prev[static_cast<size_t>(c)] >= 0; c = prev[static_cast<size_t>(c)])
                        reverse_edge(prev[static_cast<size_t>(c)], c);
                    return true;
                }
                stack.push_back(w);
            }
        }
        return false;
    }

    bool insert(int u, int v) {
        while (pebbles[static_cast<size_t>(u)] + pebbles[static_cast<size_t>(v)] < 4) {
            if (pull_pebble(u, v)) continue;
            if (pull_pebble(v, u)) continue;
            return false;
        }
        if (pebbles[static_cast<size_t>(u)] == 0) std::swap(u, v);
        --pebbles[static_cast<size_t>(u)];
        out[static_cast<size_t>(u)].push_back(v);
        return true;
    }
};

// Edge order that keeps pebble searches local on partial 2-trees: construction
// order of a 2-tree completion (seed edges first, then per added vertex).
std::vector<VertexPair> construction_edge_order(const Graph& g) {
    auto completion = complete_to_k_tree_full(g, 2);
    int n = g.vertex_count();
    std::vector<int> added_at(static_cast<size_t>(n), 0);
    int t = 1;
    for (auto it = completion.order.rbegin(); it != completion.order.rend(); ++it) added_at[static_cast<size_t>(it->v)] = t++;
    auto edges = g.edges();
    std::stable_sort(edges.begin(), edges.end(), [&](const VertexPair& a, const VertexPair& b) {
        int ta = std::max(added_at[static_cast<size_t>(a.u)], added_at[static_cast<size_t>(a.v)]);
        int tb = std::max(added_at[static_cast<size_t>(b.u)], added_at[static_cast<size_t>(b.v)]);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return edges;
}

} // namespace

LamanReport laman_classify(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) fail(ErrorCode::BadParameter, "Laman classification requires at least 2 vertices");

    std::vector<VertexPair> edges;
    if (is_partial_two_tree(g))
        edges = construction_edge_order(g);
    else
        edges = g.edges();

    PebbleGame game(n);
    int rank = 0, rejected = 0;
    for (const auto& e : edges) {
        if (game.insert(e.u, e.v))
            ++rank;
        else
            ++rejected;
    }

    LamanReport report;
    report.rank = rank;
    report.dof = 2 * n - 3 - rank;
    report.independent = rejected == 0;
    report.rigid = rank == 2 * n - 3;
    if (report.independent)
        report.tag = report.rigid ? LamanTag::Wellconstrained : LamanTag::Underconstrained;
    else
        report.tag = report.rigid ? LamanTag::Overconstrained : LamanTag::FlexibleWithOverconstraint;
    return report;
}

} // namespace ccs
