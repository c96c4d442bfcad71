#include "ktree.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "minors.hpp"

namespace ccs {

bool is_partial_two_tree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::unordered_set<int>> adj(static_cast<size_t>(n));
    for (const auto& e : g.edges()) {
        adj[static_cast<size_t>(e.u)].insert(e.v);
        adj[static_cast<size_t>(e.v)].insert(e.u);
    }
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (adj[static_cast<size_t>(v)].size() <= 2) queue.push_back(v);
    int remaining = n;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[static_cast<size_t>(v)] || adj[static_cast<size_t>(v)].size() > 2) continue;
        alive[static_cast<size_t>(v)] = 0;
        --remaining;
        auto nbrs = std::vector<int>(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());
        for (int w : nbrs) adj[static_cast<size_t>(w)].erase(v);
        adj[static_cast<size_t>(v)].clear();
        if (nbrs.size() == 2) {
            int a = nbrs[0], b = nbrs[1];
            // suppress: merge the would-be parallel edge
            if (!adj[static_cast<size_t>(a)].count(b)) {
                adj[static_cast<size_t>(a)].insert(b);
                adj[static_cast<size_t>(b)].insert(a);
            }
            for (int w : {a, b})
                if (adj[static_cast<size_t>(w)].size() <= 2) queue.push_back(w);
        } else {
            for (int w : nbrs)
                if (adj[static_cast<size_t>(w)].size() <= 2) queue.push_back(w);
        }
    }
    return remaining == 0;
}

namespace {

struct TwoTreeState {
    int n;
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    int alive_count;

    // candidate ordering: no-fill steps first, then lowest fill pair, then vertex
    struct Cand {
        int kind; // 0 = no fill needed, 1 = fill needed
        VertexPair fill_key;
        int v;
        auto operator<=>(const Cand&) const = default;
    };
    std::set<Cand> cands;
    std::vector<std::optional<Cand>> entry;

    explicit TwoTreeState(const Graph& g)
        : n(g.vertex_count()), adj(static_cast<size_t>(n)), alive(static_cast<size_t>(n), 1), alive_count(n),
          entry(static_cast<size_t>(n)) {
        for (const auto& e : g.edges()) {
            adj[static_cast<size_t>(e.u)].insert(e.v);
            adj[static_cast<size_t>(e.v)].insert(e.u);
        }
        for (int v = 0; v < n; ++v) refresh(v);
    }

    bool has_edge(int a, int b) const { return adj[static_cast<size_t>(a)].count(b) > 0; }

    int lowest_alive_other(int v, int skip = -1) const {
        for (int w = 0; w < n; ++w)
            if (alive[static_cast<size_t>(w)] && w != v && w != skip) return w;
        return -1;
    }

    // Pick the second base vertex for a degree-<=1 elimination of v with known
    // neighbor a (or -1): prefer a neighbor of a so the base edge already exists.
    int pick_partner(int v, int a) const {
        if (a >= 0) {
            for (int w : adj[static_cast<size_t>(a)])
                if (w != v && alive[static_cast<size_t>(w)]) return w;
        }
        return lowest_alive_other(v, a);
    }

    std::optional<Cand> compute(int v) const {
        if (!alive[static_cast<size_t>(v)] || alive_count <= 2) return std::nullopt;
        const auto& nb = adj[static_cast<size_t>(v)];
        if (nb.size() > 2) return std::nullopt;
        if (nb.size() == 2) {
            auto it = nb.begin();
            int a = *it++, b = *it;
            if (has_edge(a, b)) return Cand{0, VertexPair(), v};
            return Cand{1, VertexPair(a, b), v};
        }
        if (nb.size() == 1) {
            int a = *nb.begin();
            int b = pick_partner(v, a);
            if (b < 0) return std::nullopt;
            VertexPair key = std::min(VertexPair(v, b), has_edge(a, b) ? VertexPair(v, b) : VertexPair(a, b));
            return Cand{1, key, v};
        }
        int a = lowest_alive_other(v);
        if (a < 0) return std::nullopt;
        int b = lowest_alive_other(v, a);
        if (b < 0) return std::nullopt;
        return Cand{1, VertexPair(v, a), v};
    }

    void refresh(int v) {
        if (entry[static_cast<size_t>(v)]) {
            cands.erase(*entry[static_cast<size_t>(v)]);
            entry[static_cast<size_t>(v)].reset();
        }
        auto c = compute(v);
        if (c) {
            cands.insert(*c);
            entry[static_cast<size_t>(v)] = c;
        }
    }
};

} // namespace

KTreeCompletion complete_two_tree(const Graph& g) {
    KTreeCompletion out;
    int n = g.vertex_count();
    if (n <= 1) return out;
    TwoTreeState st(g);

    auto add_fill = [&](int a, int b) {
        if (a == b || st.has_edge(a, b)) return;
        out.fill.emplace_back(a, b);
        if (st.alive[static_cast<size_t>(a)] && st.alive[static_cast<size_t>(b)]) {
            st.adj[static_cast<size_t>(a)].insert(b);
            st.adj[static_cast<size_t>(b)].insert(a);
        }
    };

    while (st.alive_count > 2) {
        if (st.cands.empty()) fail(ErrorCode::NotPartialKTree, "graph is not a partial 2-tree");
        auto cand = *st.cands.begin();
        int v = cand.v;
        std::vector<int> nb(st.adj[static_cast<size_t>(v)].begin(), st.adj[static_cast<size_t>(v)].end());
        int a, b;
        if (nb.size() == 2) {
            a = nb[0];
            b = nb[1];
        } else if (nb.size() == 1) {
            a = nb[0];
            b = st.pick_partner(v, a);
            add_fill(v, b);
        } else {
            a = st.lowest_alive_other(v);
            b = st.lowest_alive_other(v, a);
            add_fill(v, a);
            add_fill(v, b);
        }
        bool base_edge_new = !st.has_edge(a, b);
        add_fill(a, b);
        out.order.push_back({v, {std::min(a, b), std::max(a, b)}});

        // remove v (fills may have extended its adjacency beyond nb)
        st.alive[static_cast<size_t>(v)] = 0;
        --st.alive_count;
        std::vector<int> cur(st.adj[static_cast<size_t>(v)].begin(), st.adj[static_cast<size_t>(v)].end());
        for (int w : cur) st.adj[static_cast<size_t>(w)].erase(v);
        st.adj[static_cast<size_t>(v)].clear();
        if (st.entry[static_cast<size_t>(v)]) {
            st.cands.erase(*st.entry[static_cast<size_t>(v)]);
            st.entry[static_cast<size_t>(v)].reset();
        }

        st.refresh(a);
        st.refresh(b);
        if (base_edge_new) {
            // a newly created base edge can turn common neighbors into no-fill steps
            const auto& small = st.adj[static_cast<size_t>(a)].size() <= st.adj[static_cast<size_t>(b)].size()
                                    ? st.adj[static_cast<size_t>(a)]
                                    : st.adj[static_cast<size_t>(b)];
            for (int w : std::vector<int>(small.begin(), small.end()))
                if (w != a && w != b) st.refresh(w);
        }
    }

    for (int v = 0; v < n; ++v)
        if (st.alive[static_cast<size_t>(v)]) out.seed.push_back(v);
    if (out.seed.size() == 2 && !st.has_edge(out.seed[0], out.seed[1]))
        out.fill.emplace_back(out.seed[0], out.seed[1]);
    return out;
}

namespace {

// Backtracking perfect-elimination search for width 3, with fills.
struct ThreeTreeSearch {
    int n;
    std::set<std::vector<uint64_t>> failed;
    std::vector<EliminationStep> order;
    std::vector<VertexPair> fill;
    std::vector<int> seed;

    bool run(std::vector<uint64_t> rows, uint64_t alive) {
        int alive_count = std::popcount(alive);
        if (alive_count <= 4) {
            // complete the remaining vertices into a clique
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if ((alive >> v) & 1u) rest.push_back(v);
            for (size_t i = 0; i < rest.size(); ++i)
                for (size_t j = i + 1; j < rest.size(); ++j)
                    if (!((rows[static_cast<size_t>(rest[i])] >> rest[j]) & 1u)) fill.emplace_back(rest[i], rest[j]);
            seed = rest;
            return true;
        }
        std::vector<uint64_t> key = rows;
        key.push_back(alive);
        if (failed.count(key)) return false;

        // candidates ordered: clique neighborhoods first, then by fill count, then id
        struct C {
            int fills;
            int v;
            std::vector<VertexPair> missing;
        };
        std::vector<C> cands;
        for (int v = 0; v < n; ++v) {
            if (!((alive >> v) & 1u)) continue;
            uint64_t nb = rows[static_cast<size_t>(v)] & alive;
            if (std::popcount(nb) > 3) continue;
            std::vector<int> ns;
            for (uint64_t m = nb; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                ns.push_back(w);
            }
            C c{0, v, {}};
            for (size_t i = 0; i < ns.size(); ++i)
                for (size_t j = i + 1; j < ns.size(); ++j)
                    if (!((rows[static_cast<size_t>(ns[i])] >> ns[j]) & 1u)) c.missing.emplace_back(ns[i], ns[j]);
            c.fills = static_cast<int>(c.missing.size());
            cands.push_back(std::move(c));
        }
        std::sort(cands.begin(), cands.end(), [](const C& a, const C& b) {
            if (a.fills != b.fills) return a.fills < b.fills;
            return a.v < b.v;
        });
        for (const auto& c : cands) {
            auto rows2 = rows;
            for (const auto& m : c.missing) {
                rows2[static_cast<size_t>(m.u)] |= 1ull << m.v;
                rows2[static_cast<size_t>(m.v)] |= 1ull << m.u;
            }
            uint64_t nb = rows2[static_cast<size_t>(c.v)] & alive;
            std::vector<int> base;
            for (uint64_t m = nb; m;) {
                base.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            size_t fill_mark = fill.size(), order_mark = order.size();
            for (const auto& m : c.missing) fill.push_back(m);
            // a base smaller than 3 is allowed (degenerate attachments)
            order.push_back({c.v, base});
            if (run(rows2, alive & ~(1ull << c.v))) return true;
            fill.resize(fill_mark);
            order.resize(order_mark);
        }
        failed.insert(std::move(key));
        return false;
    }
};

} // namespace

KTreeCompletion complete_three_tree(const Graph& g) {
    int n = g.vertex_count();
    if (n > 60) fail(ErrorCode::Unsupported, "3-tree completion limited to 60 vertices");
    KTreeCompletion out;
    if (n <= 1) return out;
    ThreeTreeSearch search;
    search.n = n;
    std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
    for (const auto& e : g.edges()) {
        rows[static_cast<size_t>(e.u)] |= 1ull << e.v;
        rows[static_cast<size_t>(e.v)] |= 1ull << e.u;
    }
    uint64_t alive = n == 64 ? ~0ull : (1ull << n) - 1;
    if (!search.run(std::move(rows), alive)) fail(ErrorCode::NotPartialKTree, "graph is not a partial 3-tree");

    // Densify the width-3 elimination into an actual 3-tree: every added vertex
    // must sit on a triangle of the part built so far.
    std::vector<std::vector<char>> adj(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    auto link = [&](int a, int b) {
        adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    };
    for (const auto& e : g.edges()) link(e.u, e.v);
    for (const auto& e : search.fill) link(e.u, e.v);
    out.fill = std::move(search.fill);
    out.seed = std::move(search.seed);

    std::vector<char> placed(static_cast<size_t>(n), 0);
    for (int s : out.seed) placed[static_cast<size_t>(s)] = 1;
    std::vector<EliminationStep> construction;
    for (auto it = search.order.rbegin(); it != search.order.rend(); ++it) {
        int v = it->v;
        std::vector<int> base = it->base;
        while (static_cast<int>(base.size()) < 3) {
            int pick = -1;
            for (int x = 0; x < n && pick < 0; ++x) {
                if (!placed[static_cast<size_t>(x)] || x == v) continue;
                if (std::find(base.begin(), base.end(), x) != base.end()) continue;
                bool clique = true;
                for (int b : base)
                    if (!adj[static_cast<size_t>(x)][static_cast<size_t>(b)]) {
                        clique = false;
                        break;
                    }
                if (clique) pick = x;
            }
            if (pick < 0) break; // too few placed vertices; degenerate attachment
            base.push_back(pick);
        }
        for (int b : base)
            if (!adj[static_cast<size_t>(v)][static_cast<size_t>(b)]) {
                link(v, b);
                out.fill.emplace_back(v, b);
            }
        std::sort(base.begin(), base.end());
        construction.push_back({v, std::move(base)});
        placed[static_cast<size_t>(v)] = 1;
    }
    out.order.assign(construction.rbegin(), construction.rend());
    return out;
}

KTreeCompletion complete_to_k_tree_full(const Graph& g, int k) {
    if (k == 2) return complete_two_tree(g);
    if (k == 3) return complete_three_tree(g);
    fail(ErrorCode::UnsupportedDimension, "k-tree completion supports k = 2 or 3");
}

std::vector<VertexPair> complete_to_k_tree(const Graph& g, int k) {
    auto full = complete_to_k_tree_full(g, k);
    auto fill = full.fill;
    std::sort(fill.begin(), fill.end());
    return fill;
}

bool is_partial_k_tree(const Graph& g, int k) {
    if (k == 2) return is_partial_two_tree(g);
    if (k == 3) {
        try {
            complete_three_tree(g);
            return true;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NotPartialKTree) return false;
            throw;
        }
    }
    fail(ErrorCode::UnsupportedDimension, "partial k-tree test supports k = 2 or 3");
}

bool is_k_tree(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n <= k) return g.edge_count() == n * (n - 1) / 2; // degenerate small k-trees
    if (!g.connected()) return false;
    if (g.edge_count() != k * n - k * (k + 1) / 2) return false;
    return is_partial_k_tree(g, k);
}

bool is_three_realizable(const Graph& g) { return !has_minor(g, Graph::k5()) && !has_minor(g, Graph::k222()); }

} // namespace ccs
