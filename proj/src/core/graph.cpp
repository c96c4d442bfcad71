#include "graph.hpp"

#include <algorithm>

namespace ccs {

void Graph::add_edge(int u, int v) {
    int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorCode::VertexNotFound, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidInput, "self-loops are not allowed");
    if (has_edge(u, v)) fail(ErrorCode::InvalidInput, "parallel edges are not allowed");
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
    edges_.emplace_back(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = adj_[static_cast<size_t>(u)];
    const auto& b = adj_[static_cast<size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

bool Graph::connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    return static_cast<int>(connected_components().front().size()) == n;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    int n = vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : adj_[static_cast<size_t>(v)]) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<std::vector<int>> Graph::components_without(const std::vector<int>& removed) const {
    int n = vertex_count();
    std::vector<char> banned(static_cast<size_t>(n), 0);
    for (int r : removed) banned[static_cast<size_t>(r)] = 1;
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (banned[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : adj_[static_cast<size_t>(v)]) {
                if (!banned[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<int> Graph::articulation_vertices() const {
    // Iterative Tarjan lowpoint computation; safe for deep graphs.
    int n = vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1), child_count(static_cast<size_t>(n), 0);
    std::vector<char> is_art(static_cast<size_t>(n), 0);
    int timer = 0;

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] >= 0) continue;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = adj_[static_cast<size_t>(f.v)];
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[static_cast<size_t>(w)] < 0) {
                    parent[static_cast<size_t>(w)] = f.v;
                    ++child_count[static_cast<size_t>(f.v)];
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[static_cast<size_t>(f.v)]) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                stack.pop_back();
                int p = parent[static_cast<size_t>(f.v)];
                if (p >= 0) {
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(f.v)]);
                    if (parent[static_cast<size_t>(p)] >= 0 && low[static_cast<size_t>(f.v)] >= disc[static_cast<size_t>(p)])
                        is_art[static_cast<size_t>(p)] = 1;
                }
            }
        }
        if (child_count[static_cast<size_t>(root)] > 1) is_art[static_cast<size_t>(root)] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_art[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> Graph::biconnected_blocks() const {
    int n = vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    auto pop_block = [&](int u, int w) {
        std::vector<int> verts;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            for (int x : {a, b}) {
                if (!seen[static_cast<size_t>(x)]) {
                    seen[static_cast<size_t>(x)] = 1;
                    verts.push_back(x);
                }
            }
            if (a == u && b == w) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    };

    struct Frame {
        int v;
        size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] >= 0) continue;
        if (adj_[static_cast<size_t>(root)].empty()) {
            disc[static_cast<size_t>(root)] = timer++;
            blocks.push_back({root});
            continue;
        }
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = adj_[static_cast<size_t>(f.v)];
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[static_cast<size_t>(w)] < 0) {
                    parent[static_cast<size_t>(w)] = f.v;
                    edge_stack.emplace_back(f.v, w);
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[static_cast<size_t>(f.v)] && disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                    edge_stack.emplace_back(f.v, w);
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                stack.pop_back();
                int p = parent[static_cast<size_t>(f.v)];
                if (p >= 0) {
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(f.v)]);
                    if (low[static_cast<size_t>(f.v)] >= disc[static_cast<size_t>(p)]) pop_block(p, f.v);
                }
            }
        }
    }
    return blocks;
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* old_to_new) const {
    std::vector<int> map(static_cast<size_t>(vertex_count()), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(verts.size()));
    for (const auto& e : edges_) {
        int a = map[static_cast<size_t>(e.u)], b = map[static_cast<size_t>(e.v)];
        if (a >= 0 && b >= 0) out.add_edge(a, b);
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
    auto a = edges_;
    auto b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::k222() {
    Graph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) g.add_edge(i, j);
    return g;
}

ContractionResult contract_edge(const Graph& g, VertexPair e) {
    if (!g.has_edge(e.u, e.v)) fail(ErrorCode::EdgeNotFound, "contract_edge: edge not in graph");
    int n = g.vertex_count();
    std::vector<int> map(static_cast<size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == e.v) continue; // absorbed into e.u
        map[static_cast<size_t>(v)] = next++;
    }
    map[static_cast<size_t>(e.v)] = map[static_cast<size_t>(e.u)];
    Graph out(n - 1);
    for (const auto& edge : g.edges()) {
        int a = map[static_cast<size_t>(edge.u)], b = map[static_cast<size_t>(edge.v)];
        if (a == b) continue;
        if (!out.has_edge(a, b)) out.add_edge(a, b);
    }
    return {std::move(out), std::move(map)};
}

Graph with_edge(const Graph& g, VertexPair f) {
    if (f.u >= g.vertex_count() || f.v >= g.vertex_count() || f.u < 0)
        fail(ErrorCode::VertexNotFound, "with_edge: endpoint out of range");
    if (g.has_edge(f.u, f.v)) fail(ErrorCode::NotANonEdge, "pair is already an edge");
    Graph out = g;
    out.add_edge(f.u, f.v);
    return out;
}

Graph with_edges(const Graph& g, const std::vector<VertexPair>& fs) {
    Graph out = g;
    for (const auto& f : fs) {
        if (f.u >= g.vertex_count() || f.v >= g.vertex_count() || f.u < 0)
            fail(ErrorCode::VertexNotFound, "with_edges: endpoint out of range");
        if (out.has_edge(f.u, f.v)) fail(ErrorCode::NotANonEdge, "pair is already an edge");
        out.add_edge(f.u, f.v);
    }
    return out;
}

} // namespace ccs
