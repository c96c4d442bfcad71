#pragma once

#include <algorithm>
#include <vector>

#include "core/graph.hpp"
#include "core/rng.hpp"

namespace ccs::testing {

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> list) {
    Graph g(n);
    for (auto [u, v] : list) g.add_edge(u, v);
    return g;
}

// K4 on {0,1,2,3} minus the edge (0,1); the canonical base-case shape.
inline Graph k4_minus_f() { return from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Independent brute-force minor test: enumerate assignments of host vertices
// to branch sets (or none) and check connectivity plus edge coverage.
inline bool brute_force_has_minor(const Graph& g, const Graph& h) {
    int n = g.vertex_count(), k = h.vertex_count();
    if (k == 0) return true;
    if (n < k) return false;
    std::vector<int> label(static_cast<size_t>(n), -1);

    auto branch_sets_ok = [&]() {
        for (int i = 0; i < k; ++i) {
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (label[static_cast<size_t>(v)] == i) set.push_back(v);
            if (set.empty()) return false;
            // connectivity of the branch set
            std::vector<int> stack{set[0]};
            std::vector<char> seen(static_cast<size_t>(n), 0);
            seen[static_cast<size_t>(set[0])] = 1;
            int found = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v))
                    if (label[static_cast<size_t>(w)] == i && !seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        ++found;
                        stack.push_back(w);
                    }
            }
            if (found != static_cast<int>(set.size())) return false;
        }
        for (const auto& e : h.edges()) {
            bool covered = false;
            for (const auto& ge : g.edges()) {
                int a = label[static_cast<size_t>(ge.u)], b = label[static_cast<size_t>(ge.v)];
                if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return branch_sets_ok();
        for (int c = -1; c < k; ++c) {
            label[static_cast<size_t>(v)] = c;
            if (self(self, v + 1)) return true;
        }
        label[static_cast<size_t>(v)] = -1;
        return false;
    };
    return rec(rec, 0);
}

// Random 2-tree built by repeatedly attaching a vertex to a random edge.
inline Graph random_two_tree(int n, Rng& rng) {
    Graph g(n);
    if (n >= 2) g.add_edge(0, 1);
    if (n >= 3) {
        g.add_edge(0, 2);
        g.add_edge(1, 2);
    }
    for (int v = 3; v < n; ++v) {
        const auto& edges = g.edges();
        auto base = edges[rng.below(edges.size())];
        g.add_edge(v, base.u);
        g.add_edge(v, base.v);
    }
    return g;
}

inline Graph random_three_tree(int n, Rng& rng) {
    Graph g(n);
    for (int i = 0; i < std::min(n, 4); ++i)
        for (int j = i + 1; j < std::min(n, 4); ++j) g.add_edge(i, j);
    std::vector<std::array<int, 3>> faces;
    if (n >= 4) faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < n; ++v) {
        auto face = faces[rng.below(faces.size())];
        for (int x : face) g.add_edge(v, x);
        faces.push_back({face[0], face[1], v});
        faces.push_back({face[0], face[2], v});
        faces.push_back({face[1], face[2], v});
    }
    return g;
}

// Random connected graph by union of a random spanning tree and extra edges.
inline Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.below(static_cast<uint64_t>(v))));
    for (int tries = 0; tries < extra_edges * 8 && extra_edges > 0; ++tries) {
        int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int b = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        if (a == b || g.has_edge(a, b)) continue;
        g.add_edge(a, b);
        if (--extra_edges == 0) break;
    }
    return g;
}

// All graphs on n vertices with the given edge mask decoded from bit index.
inline Graph graph_from_mask(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

} // namespace ccs::testing
