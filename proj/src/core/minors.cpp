#include "minors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace ccs {

namespace {

constexpr int kExactCanonicalBound = 11; // upper-triangle bits + size fit in 64 bits

int min_degree(const SmallGraph& g) {
    int m = g.n;
    for (int v = 0; v < g.n; ++v) m = std::min(m, g.degree(v));
    return g.n == 0 ? 0 : m;
}

} // namespace

SmallGraph SmallGraph::from(const Graph& g) {
    if (g.vertex_count() > 64) fail(ErrorCode::Unsupported, "graph too large for minor search (limit 64 vertices)");
    SmallGraph s;
    s.n = g.vertex_count();
    s.rows.assign(static_cast<size_t>(s.n), 0);
    for (const auto& e : g.edges()) s.set_edge(e.u, e.v);
    return s;
}

Graph SmallGraph::to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) g.add_edge(u, v);
    return g;
}

int SmallGraph::degree(int v) const { return std::popcount(rows[static_cast<size_t>(v)]); }

int SmallGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

SmallGraph SmallGraph::remove_vertex(int v) const {
    SmallGraph out;
    out.n = n - 1;
    out.rows.assign(static_cast<size_t>(out.n), 0);
    for (int u = 0, nu = 0; u < n; ++u) {
        if (u == v) continue;
        uint64_t row = rows[static_cast<size_t>(u)];
        uint64_t packed = 0;
        for (int w = 0, nw = 0; w < n; ++w) {
            if (w == v) continue;
            if ((row >> w) & 1u) packed |= 1ull << nw;
            ++nw;
        }
        out.rows[static_cast<size_t>(nu++)] = packed;
    }
    return out;
}

SmallGraph SmallGraph::contract(int u, int v) const {
    SmallGraph merged = *this;
    merged.rows[static_cast<size_t>(u)] |= rows[static_cast<size_t>(v)];
    merged.rows[static_cast<size_t>(u)] &= ~(1ull << u);
    merged.rows[static_cast<size_t>(u)] &= ~(1ull << v);
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if ((merged.rows[static_cast<size_t>(w)] >> v) & 1u) merged.rows[static_cast<size_t>(w)] |= 1ull << u;
    }
    return merged.remove_vertex(v);
}

SmallGraph SmallGraph::remove_edge(int u, int v) const {
    SmallGraph out = *this;
    out.rows[static_cast<size_t>(u)] &= ~(1ull << v);
    out.rows[static_cast<size_t>(v)] &= ~(1ull << u);
    return out;
}

namespace {

// Backtracking minimum-adjacency-encoding canonicalization over degree classes.
struct Canonicalizer {
    const SmallGraph& g;
    std::vector<int> best_perm;
    std::vector<uint64_t> best_code;
    std::vector<int> perm;
    std::vector<char> used;

    explicit Canonicalizer(const SmallGraph& graph) : g(graph) {}

    // code: row r of the permuted adjacency restricted to columns < r, packed row by row
    std::vector<uint64_t> encode(const std::vector<int>& p) const {
        std::vector<uint64_t> code;
        uint64_t acc = 0;
        int bits = 0;
        for (int r = 0; r < g.n; ++r) {
            for (int c = 0; c < r; ++c) {
                acc = (acc << 1) | (g.has_edge(p[static_cast<size_t>(r)], p[static_cast<size_t>(c)]) ? 1u : 0u);
                if (++bits == 64) {
                    code.push_back(acc);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if (bits) code.push_back(acc << (64 - bits));
        return code;
    }

    void search(const std::vector<std::vector<int>>& classes) {
        perm.assign(static_cast<size_t>(g.n), -1);
        used.assign(static_cast<size_t>(g.n), 0);
        rec(0, classes);
    }

    void rec(int pos, const std::vector<std::vector<int>>& classes) {
        if (pos == g.n) {
            auto code = encode(perm);
            if (best_code.empty() || code < best_code) {
                best_code = code;
                best_perm = perm;
            }
            return;
        }
        // which class does position pos draw from
        int cls = 0, off = pos;
        while (off >= static_cast<int>(classes[static_cast<size_t>(cls)].size())) {
            off -= static_cast<int>(classes[static_cast<size_t>(cls)].size());
            ++cls;
        }
        for (int v : classes[static_cast<size_t>(cls)]) {
            if (used[static_cast<size_t>(v)]) continue;
            // prefix pruning: row bits against already-chosen columns
            if (!best_code.empty()) {
                uint64_t row = 0, best_row = 0;
                for (int c = 0; c < pos; ++c) {
                    row = (row << 1) | (g.has_edge(v, perm[static_cast<size_t>(c)]) ? 1u : 0u);
                    best_row = (best_row << 1) | row_bit_of_best(pos, c);
                }
                if (row > best_row) continue;
            }
            used[static_cast<size_t>(v)] = 1;
            perm[static_cast<size_t>(pos)] = v;
            rec(pos + 1, classes);
            used[static_cast<size_t>(v)] = 0;
        }
    }

    int row_bit_of_best(int r, int c) const {
        int idx = r * (r - 1) / 2 + c;
        int word = idx / 64, bit = idx % 64;
        if (word >= static_cast<int>(best_code.size())) return 0;
        return static_cast<int>((best_code[static_cast<size_t>(word)] >> (63 - bit)) & 1u);
    }
};

} // namespace

uint64_t SmallGraph::canonical_key() const {
    if (n == 0) return 0;
    if (n > kExactCanonicalBound) {
        // degree-profile hash; callers must not rely on exactness here
        std::vector<uint64_t> sorted = rows;
        std::sort(sorted.begin(), sorted.end());
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(n);
        for (uint64_t r : sorted) {
            h ^= r;
            h *= 1099511628211ull;
        }
        return h | (1ull << 63);
    }
    // group vertices by (degree, sorted neighbor degrees)
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        for (int w = 0; w < n; ++w)
            if (has_edge(v, w)) nd.push_back(degree(w));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), degree(v));
        sig[static_cast<size_t>(v)] = {std::move(nd), v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) classes.emplace_back();
        classes.back().push_back(sig[i].second);
    }
    Canonicalizer canon(*this);
    canon.search(classes);
    uint64_t key = static_cast<uint64_t>(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < r; ++c)
            key = (key << 1) | static_cast<uint64_t>(canon.row_bit_of_best(r, c));
    return key;
}

namespace {

// Injective embedding of h into g preserving edges (subgraph containment).
bool subgraph_contains(const SmallGraph& g, const SmallGraph& h, std::vector<int>* embedding) {
    if (h.n > g.n || h.edge_count() > g.edge_count()) return false;
    std::vector<int> order(static_cast<size_t>(h.n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> map(static_cast<size_t>(h.n), -1);
    uint64_t used = 0;

    auto rec = [&](auto&& self, size_t pos) -> bool {
        if (pos == order.size()) return true;
        int hv = order[pos];
        for (int gv = 0; gv < g.n; ++gv) {
            if ((used >> gv) & 1u) continue;
            if (g.degree(gv) < h.degree(hv)) continue;
            bool ok = true;
            for (size_t q = 0; q < pos; ++q) {
                int hw = order[q];
                if (h.has_edge(hv, hw) && !g.has_edge(gv, map[static_cast<size_t>(hw)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<size_t>(hv)] = gv;
            used |= 1ull << gv;
            if (self(self, pos + 1)) return true;
            used &= ~(1ull << gv);
            map[static_cast<size_t>(hv)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    if (embedding) *embedding = map;
    return true;
}

struct MinorSearch {
    SmallGraph h;
    int h_min_degree = 0;
    std::map<uint64_t, bool> memo;

    // classes[i] = original-graph vertices merged into current vertex i (only for model extraction)
    std::optional<std::vector<std::vector<int>>> model;
    bool want_model = false;

    bool run(SmallGraph g, std::vector<std::vector<int>> classes) {
        // reductions valid because h has min degree >= 3 (checked by caller for deg-2 rule)
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < g.n && !changed; ++v) {
                int d = g.degree(v);
                if (d <= 1 && h_min_degree >= d + 1) {
                    g = g.remove_vertex(v);
                    classes.erase(classes.begin() + v);
                    changed = true;
                } else if (d == 2 && h_min_degree >= 3) {
                    int a = std::countr_zero(g.rows[static_cast<size_t>(v)]);
                    int keep = std::min(v, a), drop = std::max(v, a);
                    auto merged = std::move(classes[static_cast<size_t>(drop)]);
                    classes[static_cast<size_t>(keep)].insert(classes[static_cast<size_t>(keep)].end(), merged.begin(),
                                                              merged.end());
                    classes.erase(classes.begin() + drop);
                    g = g.contract(keep, drop);
                    changed = true;
                }
            }
        }
        if (g.n < h.n || g.edge_count() < h.edge_count()) return false;

        std::vector<int> embedding;
        if (subgraph_contains(g, h, want_model ? &embedding : nullptr)) {
            if (want_model) {
                std::vector<std::vector<int>> out(static_cast<size_t>(h.n));
                for (int i = 0; i < h.n; ++i) out[static_cast<size_t>(i)] = classes[static_cast<size_t>(embedding[static_cast<size_t>(i)])];
                model = std::move(out);
            }
            return true;
        }

        uint64_t key = g.canonical_key();
        bool exact_key = g.n <= kExactCanonicalBound;
        if (exact_key) {
            auto it = memo.find(key);
            if (it != memo.end() && !it->second) return false;
            if (it != memo.end() && it->second && !want_model) return true;
        }

        for (int u = 0; u < g.n; ++u) {
            uint64_t row = g.rows[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                auto classes2 = classes;
                classes2[static_cast<size_t>(u)].insert(classes2[static_cast<size_t>(u)].end(),
                                                        classes2[static_cast<size_t>(v)].begin(),
                                                        classes2[static_cast<size_t>(v)].end());
                classes2.erase(classes2.begin() + v);
                if (run(g.contract(u, v), std::move(classes2))) {
                    if (exact_key) memo[key] = true;
                    return true;
                }
            }
        }
        if (exact_key) memo[key] = false;
        return false;
    }
};

// Reduce a host graph at Graph level before converting to bitsets: split into
// biconnected blocks (valid when h is 2-connected) and drop small blocks.
std::vector<Graph> host_pieces(const Graph& g, const Graph& h) {
    bool h_biconnected = h.vertex_count() >= 3 && h.articulation_vertices().empty() && h.connected();
    if (!h_biconnected) return {g};
    std::vector<Graph> pieces;
    for (const auto& block : g.biconnected_blocks()) {
        if (static_cast<int>(block.size()) < h.vertex_count()) continue;
        pieces.push_back(g.induced(block));
    }
    if (pieces.empty()) pieces.push_back(Graph(0));
    return pieces;
}

} // namespace

bool has_minor(const Graph& g, const Graph& h) {
    if (h.vertex_count() > 8) fail(ErrorCode::MinorTargetTooLarge, "minor target exceeds 8 vertices");
    if (h.vertex_count() == 0) return true;
    SmallGraph hs = SmallGraph::from(h);
    for (const auto& piece : host_pieces(g, h)) {
        if (piece.vertex_count() < h.vertex_count()) continue;
        MinorSearch search;
        search.h = hs;
        search.h_min_degree = min_degree(hs);
        std::vector<std::vector<int>> classes(static_cast<size_t>(piece.vertex_count()));
        for (int v = 0; v < piece.vertex_count(); ++v) classes[static_cast<size_t>(v)] = {v};
        if (search.run(SmallGraph::from(piece), std::move(classes))) return true;
    }
    return false;
}

std::optional<std::vector<std::vector<int>>> find_minor_model(const Graph& g, const Graph& h) {
    if (h.vertex_count() > 8) fail(ErrorCode::MinorTargetTooLarge, "minor target exceeds 8 vertices");
    if (h.vertex_count() == 0) return std::vector<std::vector<int>>{};
    SmallGraph hs = SmallGraph::from(h);

    bool h_biconnected = h.vertex_count() >= 3 && h.articulation_vertices().empty() && h.connected();
    std::vector<std::vector<int>> piece_vertexsets;
    if (h_biconnected) {
        piece_vertexsets = g.biconnected_blocks();
    } else {
        piece_vertexsets.emplace_back(g.vertex_count());
        std::iota(piece_vertexsets.back().begin(), piece_vertexsets.back().end(), 0);
    }

    for (const auto& block : piece_vertexsets) {
        if (static_cast<int>(block.size()) < h.vertex_count()) continue;
        Graph piece = g.induced(block);
        MinorSearch search;
        search.h = hs;
        search.h_min_degree = min_degree(hs);
        search.want_model = true;
        std::vector<std::vector<int>> classes(block.size());
        for (size_t v = 0; v < block.size(); ++v) classes[v] = {block[v]}; // original ids
        if (search.run(SmallGraph::from(piece), std::move(classes))) {
            for (auto& set : *search.model) std::sort(set.begin(), set.end());
            return search.model;
        }
    }
    return std::nullopt;
}

} // namespace ccs
