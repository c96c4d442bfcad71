#include "decompose.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ktree.hpp"

namespace ccs {

Graph DecompComponent::as_graph(std::vector<int>* old_to_new) const {
    int maxid = 0;
    for (int v : vertices) maxid = std::max(maxid, v);
    std::vector<int> map(static_cast<size_t>(maxid + 1), -1);
    for (size_t i = 0; i < vertices.size(); ++i) map[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(vertices.size()));
    for (const auto& e : edges) g.add_edge(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
    if (old_to_new) *old_to_new = std::move(map);
    return g;
}

bool DecompComponent::contains_pair(VertexPair p) const {
    return std::binary_search(vertices.begin(), vertices.end(), p.u) &&
           std::binary_search(vertices.begin(), vertices.end(), p.v);
}

bool DecompComponent::has_component_edge(VertexPair p) const {
    return std::find(edges.begin(), edges.end(), p) != edges.end();
}

namespace {

struct Piece {
    std::vector<int> vertices; // sorted global ids
    std::vector<VertexPair> edges;
};

Graph piece_graph(const Piece& p, std::vector<int>& to_global, std::vector<int>& to_local, int n_global) {
    to_global = p.vertices;
    to_local.assign(static_cast<size_t>(n_global), -1);
    for (size_t i = 0; i < p.vertices.size(); ++i) to_local[static_cast<size_t>(p.vertices[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(p.vertices.size()));
    for (const auto& e : p.edges) g.add_edge(to_local[static_cast<size_t>(e.u)], to_local[static_cast<size_t>(e.v)]);
    return g;
}

// Lowest canonical edge (a,b) whose endpoint pair separates the piece.
// `biconnected` pieces allow the faster articulation-based enumeration.
std::optional<VertexPair> find_edge_separation_pair(const Piece& p, int n_global, bool biconnected) {
    if (p.vertices.size() < 4) return std::nullopt;
    std::vector<int> to_global, to_local;
    Graph g = piece_graph(p, to_global, to_local, n_global);
    int n = g.vertex_count();
    bool all_degree_two = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) {
            all_degree_two = false;
            break;
        }
    if (all_degree_two && biconnected) return std::nullopt; // cycle: adjacent pairs never separate

    std::optional<VertexPair> best;
    if (biconnected) {
        for (int a = 0; a < n; ++a) {
            // b separates together with a iff b cuts g - a
            std::vector<int> keep;
            keep.reserve(static_cast<size_t>(n - 1));
            for (int v = 0; v < n; ++v)
                if (v != a) keep.push_back(v);
            Graph sub = g.induced(keep);
            for (int b_local : sub.articulation_vertices()) {
                int b = keep[static_cast<size_t>(b_local)];
                if (!g.has_edge(a, b)) continue;
                VertexPair cand(to_global[static_cast<size_t>(a)], to_global[static_cast<size_t>(b)]);
                if (!best || cand < *best) best = cand;
            }
        }
    } else {
        auto sorted = p.edges;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& e : sorted) {
            int la = to_local[static_cast<size_t>(e.u)], lb = to_local[static_cast<size_t>(e.v)];
            if (g.components_without({std::min(la, lb), std::max(la, lb)}).size() >= 2) return e;
        }
    }
    return best;
}

std::vector<Piece> split_at(const Piece& p, VertexPair ab, int n_global) {
    std::vector<int> to_global, to_local;
    Graph g = piece_graph(p, to_global, to_local, n_global);
    int la = to_local[static_cast<size_t>(ab.u)], lb = to_local[static_cast<size_t>(ab.v)];
    auto parts = g.components_without({std::min(la, lb), std::max(la, lb)});
    std::vector<Piece> out(parts.size());
    std::vector<int> part_of(p.vertices.size(), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int v : parts[i]) part_of[static_cast<size_t>(v)] = static_cast<int>(i);
        for (int v : parts[i]) out[i].vertices.push_back(to_global[static_cast<size_t>(v)]);
        out[i].vertices.push_back(ab.u);
        out[i].vertices.push_back(ab.v);
        std::sort(out[i].vertices.begin(), out[i].vertices.end());
        out[i].edges.push_back(ab);
    }
    for (const auto& e : p.edges) {
        if (e == ab) continue;
        int x = to_local[static_cast<size_t>(e.u)], y = to_local[static_cast<size_t>(e.v)];
        int px = (x == la || x == lb) ? -1 : part_of[static_cast<size_t>(x)];
        int py = (y == la || y == lb) ? -1 : part_of[static_cast<size_t>(y)];
        int part = px >= 0 ? px : py;
        out[static_cast<size_t>(part)].edges.push_back(e);
    }
    return out;
}

struct Decomposer {
    int n_global;
    bool biconnected_pieces = true; // pieces fed to refine() stay biconnected
    std::vector<DecompComponent> components;
    std::vector<DecompLink> links;

    int materialize(Piece p) {
        DecompComponent c;
        c.vertices = std::move(p.vertices);
        c.edges = std::move(p.edges);
        std::sort(c.edges.begin(), c.edges.end());
        c.shared_copy.assign(c.edges.size(), 0);
        components.push_back(std::move(c));
        return static_cast<int>(components.size()) - 1;
    }

    int find_with_edge(const std::vector<int>& ids, VertexPair e) const {
        for (int id : ids)
            if (components[static_cast<size_t>(id)].has_component_edge(e)) return id;
        return ids.empty() ? -1 : ids.front();
    }

    int find_with_vertex(const std::vector<int>& ids, int v) const {
        for (int id : ids)
            if (std::binary_search(components[static_cast<size_t>(id)].vertices.begin(),
                                   components[static_cast<size_t>(id)].vertices.end(), v))
                return id;
        return ids.empty() ? -1 : ids.front();
    }

    // 2-trees decompose into their triangles; read them off an elimination order.
    std::vector<int> refine_two_tree(const Piece& p) {
        std::vector<int> to_global, to_local;
        Graph g = piece_graph(p, to_global, to_local, n_global);
        auto completion = complete_to_k_tree_full(g, 2);
        std::vector<int> ids;
        std::map<VertexPair, std::vector<int>> edge_homes;
        for (const auto& step : completion.order) {
            int v = to_global[static_cast<size_t>(step.v)];
            int a = to_global[static_cast<size_t>(step.base[0])];
            int b = to_global[static_cast<size_t>(step.base[1])];
            Piece tri;
            tri.vertices = {v, a, b};
            std::sort(tri.vertices.begin(), tri.vertices.end());
            tri.edges = {VertexPair(v, a), VertexPair(v, b), VertexPair(a, b)};
            int id = materialize(std::move(tri));
            ids.push_back(id);
            for (const auto& e : components[static_cast<size_t>(id)].edges) edge_homes[e].push_back(id);
        }
        for (const auto& [edge, homes] : edge_homes) {
            for (size_t i = 1; i < homes.size(); ++i)
                links.push_back({homes[0], homes[i], edge.u, edge.v});
        }
        return ids;
    }

    std::vector<int> refine(Piece p) {
        {
            std::vector<int> to_global, to_local;
            Graph g = piece_graph(p, to_global, to_local, n_global);
            if (g.vertex_count() >= 4 && is_k_tree(g, 2)) return refine_two_tree(p);
        }
        auto sep = find_edge_separation_pair(p, n_global, biconnected_pieces);
        if (!sep) return {materialize(std::move(p))};
        auto parts = split_at(p, *sep, n_global);
        std::vector<int> all;
        std::vector<int> hubs;
        for (auto& part : parts) {
            auto ids = refine(std::move(part));
            hubs.push_back(find_with_edge(ids, *sep));
            all.insert(all.end(), ids.begin(), ids.end());
        }
        for (size_t i = 1; i < hubs.size(); ++i) links.push_back({hubs[0], hubs[i], sep->u, sep->v});
        return all;
    }
};

void assign_shared_copies(TwoSumDecomposition& d) {
    std::map<VertexPair, std::vector<std::pair<int, int>>> occurrences;
    for (size_t c = 0; c < d.components.size(); ++c)
        for (size_t i = 0; i < d.components[c].edges.size(); ++i)
            occurrences[d.components[c].edges[i]].emplace_back(static_cast<int>(c), static_cast<int>(i));
    for (auto& [edge, occ] : occurrences)
        for (size_t k = 1; k < occ.size(); ++k)
            d.components[static_cast<size_t>(occ[k].first)].shared_copy[static_cast<size_t>(occ[k].second)] = 1;
}

} // namespace

TwoSumDecomposition two_sum_decompose(const Graph& g) {
    if (!g.connected()) fail(ErrorCode::GraphNotConnected, "two_sum_decompose requires a connected graph");
    TwoSumDecomposition out;
    int n = g.vertex_count();
    if (n == 0) return out;

    Decomposer dec;
    dec.n_global = n;

    auto blocks = g.biconnected_blocks();
    std::vector<std::vector<int>> block_comp_ids(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
        Piece p;
        p.vertices = blocks[b];
        for (const auto& e : g.edges())
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), e.u) &&
                std::binary_search(blocks[b].begin(), blocks[b].end(), e.v))
                p.edges.push_back(e);
        block_comp_ids[b] = dec.refine(std::move(p));
    }

    // 1-sum links between blocks sharing a cut vertex
    std::map<int, std::vector<size_t>> by_vertex;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) by_vertex[v].push_back(b);
    for (const auto& [v, bs] : by_vertex) {
        if (bs.size() < 2) continue;
        int hub = dec.find_with_vertex(block_comp_ids[bs[0]], v);
        for (size_t i = 1; i < bs.size(); ++i)
            dec.links.push_back({hub, dec.find_with_vertex(block_comp_ids[bs[i]], v), v, -1});
    }

    out.components = std::move(dec.components);
    out.links = std::move(dec.links);
    out.minimal_flags.assign(out.components.size(), 1);
    assign_shared_copies(out);
    return out;
}

TwoSumDecomposition two_sum_decompose_edges_only(const Graph& g) {
    TwoSumDecomposition out;
    Decomposer dec;
    dec.n_global = g.vertex_count();
    dec.biconnected_pieces = false;
    for (const auto& comp_verts : g.connected_components()) {
        Piece p;
        p.vertices = comp_verts;
        for (const auto& e : g.edges())
            if (std::binary_search(comp_verts.begin(), comp_verts.end(), e.u)) p.edges.push_back(e);
        dec.refine(std::move(p));
    }
    out.components = std::move(dec.components);
    out.links = std::move(dec.links);
    out.minimal_flags.assign(out.components.size(), 1);
    assign_shared_copies(out);
    return out;
}

TwoSumDecomposition decompose_all(const Graph& g) {
    TwoSumDecomposition out;
    for (const auto& comp_verts : g.connected_components()) {
        Graph sub = g.induced(comp_verts);
        TwoSumDecomposition d = two_sum_decompose(sub);
        int offset = static_cast<int>(out.components.size());
        for (auto& c : d.components) {
            for (auto& v : c.vertices) v = comp_verts[static_cast<size_t>(v)];
            for (auto& e : c.edges) e = VertexPair(comp_verts[static_cast<size_t>(e.u)], comp_verts[static_cast<size_t>(e.v)]);
            out.components.push_back(std::move(c));
        }
        for (auto& l : d.links) {
            l.a += offset;
            l.b += offset;
            l.label_u = comp_verts[static_cast<size_t>(l.label_u)];
            if (l.label_v >= 0) l.label_v = comp_verts[static_cast<size_t>(l.label_v)];
            out.links.push_back(l);
        }
    }
    out.minimal_flags.assign(out.components.size(), 1);
    return out;
}

std::vector<DecompComponent> minimal_components_containing(const Graph& g, VertexPair f) {
    int n = g.vertex_count();
    if (f.u < 0 || f.v >= n) fail(ErrorCode::VertexNotFound, "minimal_components_containing: endpoint out of range");

    auto comps = g.connected_components();
    const std::vector<int>* home = nullptr;
    for (const auto& c : comps)
        if (std::binary_search(c.begin(), c.end(), f.u)) home = &c;
    if (!home || !std::binary_search(home->begin(), home->end(), f.v)) return {};

    if (g.has_edge(f.u, f.v)) {
        // ordinary decomposition restricted to the leaves that contain the edge f
        Graph sub = g.induced(*home);
        std::vector<int> to_local(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < home->size(); ++i) to_local[static_cast<size_t>((*home)[i])] = static_cast<int>(i);
        VertexPair lf(to_local[static_cast<size_t>(f.u)], to_local[static_cast<size_t>(f.v)]);
        auto d = two_sum_decompose(sub);
        std::vector<DecompComponent> out;
        for (auto& c : d.components) {
            if (!c.has_component_edge(lf)) continue;
            for (auto& v : c.vertices) v = (*home)[static_cast<size_t>(v)];
            for (auto& e : c.edges) e = VertexPair((*home)[static_cast<size_t>(e.u)], (*home)[static_cast<size_t>(e.v)]);
            std::fill(c.shared_copy.begin(), c.shared_copy.end(), 0);
            out.push_back(std::move(c));
        }
        return out;
    }

    // f non-edge: repeatedly peel splits that keep f's endpoints together
    Piece piece;
    piece.vertices = *home;
    for (const auto& e : g.edges())
        if (std::binary_search(home->begin(), home->end(), e.u)) piece.edges.push_back(e);

    bool changed = true;
    while (changed) {
        changed = false;

        // 1-sum peeling: keep only the blocks on the path between the endpoints
        {
            std::vector<int> to_global, to_local;
            Graph pg = piece_graph(piece, to_global, to_local, n);
            auto blocks = pg.biconnected_blocks();
            if (blocks.size() > 1) {
                int lu = to_local[static_cast<size_t>(f.u)], lv = to_local[static_cast<size_t>(f.v)];
                // BFS over the block-cut tree from any block containing lu to one containing lv
                std::map<int, std::vector<int>> blocks_of_vertex;
                for (size_t b = 0; b < blocks.size(); ++b)
                    for (int v : blocks[b]) blocks_of_vertex[v].push_back(static_cast<int>(b));
                std::vector<int> prev(blocks.size(), -2);
                std::vector<int> queue;
                for (int b : blocks_of_vertex[lu]) {
                    prev[static_cast<size_t>(b)] = -1;
                    queue.push_back(b);
                }
                int target = -1;
                for (size_t qi = 0; qi < queue.size() && target < 0; ++qi) {
                    int b = queue[qi];
                    if (std::binary_search(blocks[static_cast<size_t>(b)].begin(), blocks[static_cast<size_t>(b)].end(), lv)) {
                        target = b;
                        break;
                    }
                    for (int v : blocks[static_cast<size_t>(b)]) {
                        for (int nb : blocks_of_vertex[v]) {
                            if (prev[static_cast<size_t>(nb)] == -2) {
                                prev[static_cast<size_t>(nb)] = b;
                                queue.push_back(nb);
                            }
                        }
                    }
                }
                std::vector<char> keep_block(blocks.size(), 0);
                for (int b = target; b >= 0; b = prev[static_cast<size_t>(b)]) keep_block[static_cast<size_t>(b)] = 1;
                size_t kept = static_cast<size_t>(std::count(keep_block.begin(), keep_block.end(), 1));
                if (kept < blocks.size()) {
                    std::vector<char> keep_vertex(static_cast<size_t>(pg.vertex_count()), 0);
                    for (size_t b = 0; b < blocks.size(); ++b)
                        if (keep_block[b])
                            for (int v : blocks[b]) keep_vertex[static_cast<size_t>(v)] = 1;
                    Piece next;
                    for (int v = 0; v < pg.vertex_count(); ++v)
                        if (keep_vertex[static_cast<size_t>(v)]) next.vertices.push_back(to_global[static_cast<size_t>(v)]);
                    for (const auto& e : piece.edges) {
                        int x = to_local[static_cast<size_t>(e.u)], y = to_local[static_cast<size_t>(e.v)];
                        if (keep_vertex[static_cast<size_t>(x)] && keep_vertex[static_cast<size_t>(y)]) next.edges.push_back(e);
                    }
                    piece = std::move(next);
                    changed = true;
                    continue;
                }
            }
        }

        // 2-sum peeling at an edge pair whose removal keeps the endpoints together
        {
            std::vector<int> to_global, to_local;
            Graph pg = piece_graph(piece, to_global, to_local, n);
            int lu = to_local[static_cast<size_t>(f.u)], lv = to_local[static_cast<size_t>(f.v)];
            std::vector<VertexPair> candidates = piece.edges;
            std::sort(candidates.begin(), candidates.end());
            for (const auto& ab : candidates) {
                int la = to_local[static_cast<size_t>(ab.u)], lb = to_local[static_cast<size_t>(ab.v)];
                auto parts = pg.components_without({std::min(la, lb), std::max(la, lb)});
                if (parts.size() < 2) continue;
                int part_u = -1, part_v = -1;
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (std::binary_search(parts[i].begin(), parts[i].end(), lu)) part_u = static_cast<int>(i);
                    if (std::binary_search(parts[i].begin(), parts[i].end(), lv)) part_v = static_cast<int>(i);
                }
                // endpoints that coincide with {a,b} stay in every part
                if (lu == la || lu == lb) part_u = part_v;
                if (lv == la || lv == lb) part_v = part_u;
                if (part_u != part_v) continue;
                auto pieces = split_at(piece, ab, n);
                // keep the part holding both endpoints
                for (auto& cand_piece : pieces) {
                    bool has_u = std::binary_search(cand_piece.vertices.begin(), cand_piece.vertices.end(), f.u);
                    bool has_v = std::binary_search(cand_piece.vertices.begin(), cand_piece.vertices.end(), f.v);
                    if (has_u && has_v) {
                        if (cand_piece.vertices.size() < piece.vertices.size()) {
                            piece = std::move(cand_piece);
                            changed = true;
                        }
                        break;
                    }
                }
                if (changed) break;
            }
        }
    }

    DecompComponent c;
    c.vertices = std::move(piece.vertices);
    c.edges = std::move(piece.edges);
    std::sort(c.edges.begin(), c.edges.end());
    c.shared_copy.assign(c.edges.size(), 0);
    return {std::move(c)};
}

} // namespace ccs
