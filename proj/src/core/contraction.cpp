#include "contraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "decompose.hpp"
#include "ktree.hpp"
#include "minors.hpp"

namespace ccs {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void merge_into(int survivor, int absorbed) { parent[static_cast<size_t>(find(absorbed))] = find(survivor); }
};

} // namespace

ReplayResult replay_contractions(const Graph& g, const ContractionSequence& seq,
                                 const std::vector<int>& removed_isolated) {
    int n = g.vertex_count();
    UnionFind uf(n);
    std::map<int, std::set<int>> adj; // class rep -> adjacent class reps
    for (int v = 0; v < n; ++v) adj[v];
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    for (const auto& step : seq.steps) {
        int s = uf.find(step.survivor), a = uf.find(step.absorbed);
        if (s == a || !adj[s].count(a)) fail(ErrorCode::EdgeNotFound, "contraction step names a non-adjacent class pair");
        uf.merge_into(s, a);
        auto nbrs = std::move(adj[a]);
        adj.erase(a);
        adj[s].erase(a);
        for (int w : nbrs) {
            adj[w].erase(a);
            if (w != s) {
                adj[w].insert(s);
                adj[s].insert(w);
            }
        }
    }
    std::set<int> removed_classes;
    for (int r : removed_isolated) {
        int c = uf.find(r);
        if (!adj[c].empty()) fail(ErrorCode::Internal, "removed class is not isolated");
        removed_classes.insert(c);
    }
    std::vector<int> reps;
    for (const auto& [rep, _] : adj)
        if (!removed_classes.count(rep)) reps.push_back(rep);
    std::map<int, int> compact;
    for (size_t i = 0; i < reps.size(); ++i) compact[reps[static_cast<size_t>(i)]] = static_cast<int>(i);

    ReplayResult out{Graph(static_cast<int>(reps.size())), std::vector<int>(static_cast<size_t>(n), -1)};
    for (int v = 0; v < n; ++v) {
        int c = uf.find(v);
        auto it = compact.find(c);
        if (it != compact.end()) out.vertex_map[static_cast<size_t>(v)] = it->second;
    }
    std::set<VertexPair> added;
    for (const auto& [rep, nbrs] : adj) {
        if (removed_classes.count(rep)) continue;
        for (int w : nbrs) {
            if (removed_classes.count(w)) fail(ErrorCode::Internal, "removed class has a neighbor");
            VertexPair e(compact[rep], compact[w]);
            if (added.insert(e).second) out.minor.add_edge(e.u, e.v);
        }
    }
    return out;
}

std::optional<BaseCaseRoles> classify_base_case(const Graph& g, VertexPair f) {
    int n = g.vertex_count();
    if (n < 4 || g.has_edge(f.u, f.v)) return std::nullopt;
    BaseCaseRoles roles;
    roles.v1 = f.u;
    roles.v2 = f.v;
    std::vector<int> ws;
    for (int x = 0; x < n; ++x) {
        if (x == f.u || x == f.v) continue;
        auto nbrs = g.neighbors(x);
        std::vector<int> sorted(nbrs.begin(), nbrs.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted == std::vector<int>{std::min(f.u, f.v), std::max(f.u, f.v)})
            roles.us.push_back(x);
        else
            ws.push_back(x);
    }
    if (ws.size() != 2) return std::nullopt;
    roles.w1 = ws[0];
    roles.w2 = ws[1];
    if (!g.has_edge(roles.w1, roles.w2)) return std::nullopt;
    for (int v : {roles.v1, roles.v2})
        for (int w : {roles.w1, roles.w2})
            if (!g.has_edge(v, w)) return std::nullopt;
    if (g.edge_count() != 5 + 2 * static_cast<int>(roles.us.size())) return std::nullopt;
    return roles;
}

namespace {

bool presence(const Graph& g, VertexPair f) {
    Graph h = with_edge(g, f);
    for (const auto& comp : minimal_components_containing(h, f))
        if (!is_partial_two_tree(comp.as_graph())) return true;
    return false;
}

// Working quotient graph that records emitted contraction steps.
struct WorkGraph {
    int n;
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    std::vector<int> parent; // class representative tracking
    std::vector<ContractionStep> steps;

    explicit WorkGraph(const Graph& g)
        : n(g.vertex_count()), adj(static_cast<size_t>(g.vertex_count())), alive(static_cast<size_t>(g.vertex_count()), 1),
          parent(static_cast<size_t>(g.vertex_count())) {
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& e : g.edges()) {
            adj[static_cast<size_t>(e.u)].insert(e.v);
            adj[static_cast<size_t>(e.v)].insert(e.u);
        }
    }

    int rep(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }

    bool has_edge(int a, int b) const { return adj[static_cast<size_t>(a)].count(b) > 0; }

    void contract(int survivor, int absorbed) {
        if (!has_edge(survivor, absorbed)) fail(ErrorCode::Internal, "work contraction on non-edge");
        steps.push_back({survivor, absorbed});
        parent[static_cast<size_t>(absorbed)] = survivor;
        for (int w : std::vector<int>(adj[static_cast<size_t>(absorbed)].begin(), adj[static_cast<size_t>(absorbed)].end())) {
            adj[static_cast<size_t>(w)].erase(absorbed);
            if (w != survivor) {
                adj[static_cast<size_t>(w)].insert(survivor);
                adj[static_cast<size_t>(survivor)].insert(w);
            }
        }
        adj[static_cast<size_t>(absorbed)].clear();
        adj[static_cast<size_t>(survivor)].erase(absorbed);
        alive[static_cast<size_t>(absorbed)] = 0;
    }

    // collapse every vertex of `blob` into `root` (all in blob, which must be connected)
    void collapse_into(int root, const std::vector<int>& blob) {
        std::vector<char> pending(static_cast<size_t>(n), 0);
        for (int v : blob) pending[static_cast<size_t>(v)] = 1;
        pending[static_cast<size_t>(root)] = 0;
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int v = 0; v < n; ++v) {
                if (!pending[static_cast<size_t>(v)]) continue;
                if (has_edge(root, v)) {
                    contract(root, v);
                    pending[static_cast<size_t>(v)] = 0;
                    progressed = true;
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (pending[static_cast<size_t>(v)]) fail(ErrorCode::Internal, "collapse blob not connected to root");
    }
};

// Up to two internally-vertex-disjoint s-t paths (unit vertex capacities via
// node splitting). Returns interior vertex sequences.
std::vector<std::vector<int>> two_disjoint_paths(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    int N = 2 * n; // v_in = 2v, v_out = 2v+1
    std::map<std::pair<int, int>, int> cap;
    auto add = [&](int a, int b, int c) { cap[{a, b}] += c; };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? 4 : 1);
    for (const auto& e : g.edges()) {
        add(2 * e.u + 1, 2 * e.v, 1);
        add(2 * e.v + 1, 2 * e.u, 1);
    }
    auto bfs_augment = [&]() -> bool {
        std::vector<int> prev(static_cast<size_t>(N), -1);
        std::vector<int> queue{2 * s + 1};
        prev[static_cast<size_t>(2 * s + 1)] = 2 * s + 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& [key, c] : cap) {
                if (key.first != v || c <= 0) continue;
                int w = key.second;
                if (prev[static_cast<size_t>(w)] >= 0) continue;
                prev[static_cast<size_t>(w)] = v;
                if (w == 2 * t) {
                    for (int x = w; x != 2 * s + 1; x = prev[static_cast<size_t>(x)]) {
                        cap[{prev[static_cast<size_t>(x)], x}] -= 1;
                        cap[{x, prev[static_cast<size_t>(x)]}] += 1;
                    }
                    return true;
                }
                queue.push_back(w);
            }
        }
        return false;
    };
    int flow = 0;
    while (flow < 2 && bfs_augment()) ++flow;
    if (flow < 2) return {};
    // walk the two unit paths along saturated arcs
    std::vector<std::vector<int>> paths;
    std::map<std::pair<int, int>, int> used;
    for (int k = 0; k < 2; ++k) {
        std::vector<int> interior;
        int v = s;
        while (v != t) {
            int next = -1;
            for (int w : g.neighbors(v)) {
                auto key = std::make_pair(2 * v + 1, 2 * w);
                if (cap[key] == 0 && used[key] == 0) { // originally 1, now saturated
                    next = w;
                    used[key] = 1;
                    break;
                }
            }
            if (next < 0) fail(ErrorCode::Internal, "flow path extraction failed");
            if (next != t) interior.push_back(next);
            v = next;
        }
        paths.push_back(std::move(interior));
    }
    return paths;
}

std::optional<ContractionSequence> exhaustive_search(const Graph& g, VertexPair f);

// Recursive constructive reduction; `presence(g, f)` must already hold and g
// must be connected. Returns steps in g's vertex ids.
std::vector<ContractionStep> reduce_present(const Graph& g, VertexPair f) {
    if (classify_base_case(g, f)) return {};
    int v1 = f.u, v2 = f.v;

    auto translate = [](const std::vector<ContractionStep>& steps, const std::vector<int>& verts) {
        std::vector<ContractionStep> out;
        out.reserve(steps.size());
        for (const auto& s : steps)
            out.push_back({verts[static_cast<size_t>(s.survivor)], verts[static_cast<size_t>(s.absorbed)]});
        return out;
    };

    auto comps = g.components_without({std::min(v1, v2), std::max(v1, v2)});

    if (comps.size() > 1) {
        // Case k > 1: recurse into a part whose component-with-f is still bad,
        // collapse the others to u-vertices (or absorb one-sided ones).
        int chosen = -1;
        std::vector<int> chosen_verts;
        Graph chosen_sub;
        VertexPair chosen_f;
        for (size_t i = 0; i < comps.size() && chosen < 0; ++i) {
            std::vector<int> verts = comps[i];
            verts.push_back(v1);
            verts.push_back(v2);
            std::sort(verts.begin(), verts.end());
            std::vector<int> old_to_new;
            Graph sub = g.induced(verts, &old_to_new);
            VertexPair lf(old_to_new[static_cast<size_t>(v1)], old_to_new[static_cast<size_t>(v2)]);
            if (presence(sub, lf)) {
                chosen = static_cast<int>(i);
                chosen_verts = verts;
                chosen_sub = sub;
                chosen_f = lf;
            }
        }
        if (chosen < 0) fail(ErrorCode::Internal, "presence did not localize to a component");

        WorkGraph work(g);
        for (auto& s : translate(reduce_present(chosen_sub, chosen_f), chosen_verts)) work.contract(s.survivor, s.absorbed);
        int r1 = work.rep(v1), r2 = work.rep(v2);
        for (size_t j = 0; j < comps.size(); ++j) {
            if (static_cast<int>(j) == chosen) continue;
            int root = comps[j][0];
            work.collapse_into(root, comps[j]);
            bool near1 = work.has_edge(root, r1), near2 = work.has_edge(root, r2);
            if (near1 && near2) continue; // a u-vertex of Base Case 2
            if (near1)
                work.contract(r1, root);
            else if (near2)
                work.contract(r2, root);
            else
                fail(ErrorCode::GraphNotConnected, "restricted reduction requires a connected graph");
        }
        return work.steps;
    }

    // k <= 1: inspect the minimal component containing f
    Graph h = with_edge(g, f);
    auto fcomps = minimal_components_containing(h, f);
    const DecompComponent* bad = nullptr;
    for (const auto& c : fcomps)
        if (!is_partial_two_tree(c.as_graph())) {
            bad = &c;
            break;
        }
    if (!bad) fail(ErrorCode::Internal, "reduce_present called without presence");

    if (bad->vertices.size() < static_cast<size_t>(g.vertex_count())) {
        // collapse everything outside C into its attachment vertices, then recurse on C
        WorkGraph work(g);
        std::vector<char> in_c(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : bad->vertices) in_c[static_cast<size_t>(v)] = 1;
        std::vector<int> outside;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_c[static_cast<size_t>(v)]) outside.push_back(v);
        for (const auto& blob : g.components_without(bad->vertices)) {
            // attach the blob to its lowest adjacent C-vertex
            int anchor = -1;
            for (int v : blob)
                for (int w : g.neighbors(v))
                    if (in_c[static_cast<size_t>(w)] && (anchor < 0 || w < anchor)) anchor = w;
            if (anchor < 0) fail(ErrorCode::GraphNotConnected, "restricted reduction requires a connected graph");
            std::vector<int> blob_plus = blob;
            blob_plus.push_back(anchor);
            work.collapse_into(anchor, blob_plus);
        }
        std::vector<int> verts = bad->vertices;
        std::vector<int> old_to_new;
        Graph sub = g.induced(verts, &old_to_new);
        VertexPair lf(old_to_new[static_cast<size_t>(v1)], old_to_new[static_cast<size_t>(v2)]);
        for (auto& s : translate(reduce_present(sub, lf), verts)) work.contract(s.survivor, s.absorbed);
        return work.steps;
    }

    auto paths = two_disjoint_paths(g, v1, v2);
    if (paths.empty()) {
        // Subcase l <= 1: split at an articulation vertex separating v1 from v2.
        for (int v3 : g.articulation_vertices()) {
            if (v3 == v1 || v3 == v2) continue;
            auto parts = g.components_without({v3});
            int p1 = -1, p2 = -1;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (std::binary_search(parts[i].begin(), parts[i].end(), v1)) p1 = static_cast<int>(i);
                if (std::binary_search(parts[i].begin(), parts[i].end(), v2)) p2 = static_cast<int>(i);
            }
            if (p1 == p2 || p1 < 0 || p2 < 0) continue;

            auto side = [&](int keep_part, int endpoint) {
                std::vector<int> verts;
                for (size_t i = 0; i < parts.size(); ++i)
                    if (static_cast<int>(i) == keep_part)
                        for (int v : parts[i]) verts.push_back(v);
                verts.push_back(v3);
                std::sort(verts.begin(), verts.end());
                return std::make_pair(verts, endpoint);
            };

            for (auto [verts, endpoint] : {side(p1, v1), side(p2, v2)}) {
                std::vector<int> old_to_new;
                Graph sub = g.induced(verts, &old_to_new);
                VertexPair lf(old_to_new[static_cast<size_t>(endpoint)], old_to_new[static_cast<size_t>(v3)]);
                if (sub.has_edge(lf.u, lf.v) || !presence(sub, lf)) continue;
                WorkGraph work(g);
                // collapse everything outside the kept side into v3
                std::vector<char> keep(static_cast<size_t>(g.vertex_count()), 0);
                for (int v : verts) keep[static_cast<size_t>(v)] = 1;
                std::vector<int> other{v3};
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!keep[static_cast<size_t>(v)]) other.push_back(v);
                work.collapse_into(v3, other);
                for (auto& s : translate(reduce_present(sub, lf), verts)) work.contract(s.survivor, s.absorbed);
                return work.steps;
            }
        }
        // constructive route failed; fall back to the exhaustive search
        auto seq = exhaustive_search(g, f);
        if (!seq) fail(ErrorCode::Internal, "restricted reduction: constructive and exhaustive routes disagree");
        return seq->steps;
    }

    // Subcase l >= 2: contract the two disjoint paths, then absorb the rest.
    WorkGraph work(g);
    auto contract_path = [&](const std::vector<int>& interior) {
        for (size_t i = 1; i < interior.size(); ++i) work.contract(interior[0], interior[static_cast<size_t>(i)]);
        return interior[0];
    };
    int t1 = contract_path(paths[0]);
    int z1 = contract_path(paths[1]);

    // components of the current quotient minus {v1, v2, t1, z1}
    std::vector<char> special(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : {v1, v2, t1, z1}) special[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!work.alive[static_cast<size_t>(v)] || special[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
        std::vector<int> blob{v};
        seen[static_cast<size_t>(v)] = 1;
        for (size_t qi = 0; qi < blob.size(); ++qi)
            for (int w : work.adj[static_cast<size_t>(blob[qi])])
                if (!special[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    blob.push_back(w);
                }
        int q = blob[0];
        work.collapse_into(q, blob);
        bool n_t = work.has_edge(q, t1), n_z = work.has_edge(q, z1);
        bool n_1 = work.has_edge(q, v1), n_2 = work.has_edge(q, v2);
        if (n_t)
            work.contract(t1, q);
        else if (n_z)
            work.contract(z1, q);
        else if (n_1 && n_2)
            continue; // u-vertex
        else if (n_1)
            work.contract(v1, q);
        else if (n_2)
            work.contract(v2, q);
        else
            fail(ErrorCode::GraphNotConnected, "restricted reduction requires a connected graph");
    }
    return work.steps;
}

} // namespace

std::optional<ContractionSequence> restricted_contraction_reduction(const Graph& g, VertexPair f) {
    if (f.u < 0 || f.v >= g.vertex_count()) fail(ErrorCode::VertexNotFound, "non-edge endpoint out of range");
    if (g.has_edge(f.u, f.v)) fail(ErrorCode::NotANonEdge, "f must be a non-edge");
    if (!presence(g, f)) return std::nullopt;
    if (!g.connected()) fail(ErrorCode::GraphNotConnected, "restricted reduction requires a connected graph");

    ContractionSequence seq{reduce_present(g, f)};

    // validate: replay must land exactly on a base case with f preserved
    auto replayed = replay_contractions(g, seq);
    int m1 = replayed.vertex_map[static_cast<size_t>(f.u)], m2 = replayed.vertex_map[static_cast<size_t>(f.v)];
    if (m1 == m2 || replayed.minor.has_edge(m1, m2) || !classify_base_case(replayed.minor, VertexPair(m1, m2)))
        fail(ErrorCode::Internal, "restricted reduction produced an invalid sequence");
    return seq;
}

namespace {

// canonical key of (graph, marked pair) under isomorphisms fixing {u,v} as a set
uint64_t pair_canonical_key(const SmallGraph& g, int u, int v) {
    int n = g.n;
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) rest.push_back(x);
    uint64_t best = ~0ull;
    std::vector<int> perm(static_cast<size_t>(n));
    std::sort(rest.begin(), rest.end());
    for (int swap = 0; swap < 2; ++swap) {
        perm[0] = swap ? v : u;
        perm[1] = swap ? u : v;
        std::vector<int> r = rest;
        do {
            for (size_t i = 0; i < r.size(); ++i) perm[i + 2] = r[i];
            uint64_t key = static_cast<uint64_t>(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    key = (key << 1) | (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? 1u : 0u);
            best = std::min(best, key);
        } while (std::next_permutation(r.begin(), r.end()));
    }
    return best;
}

struct ExhaustiveSearch {
    std::unordered_set<uint64_t> dead;

    std::optional<std::vector<ContractionStep>> run(const Graph& g, int fu, int fv,
                                                    const std::vector<int>& names) {
        if (g.has_edge(fu, fv)) return std::nullopt;
        if (classify_base_case(g, VertexPair(fu, fv))) return std::vector<ContractionStep>{};
        if (g.vertex_count() <= 4) return std::nullopt;
        SmallGraph sg = SmallGraph::from(g);
        uint64_t key = pair_canonical_key(sg, fu, fv);
        if (dead.count(key)) return std::nullopt;
        for (const auto& e : g.edges()) {
            if ((e.u == fu && e.v == fv) || (e.u == fv && e.v == fu)) continue;
            auto contracted = contract_edge(g, e);
            int nu = contracted.vertex_map[static_cast<size_t>(fu)], nv = contracted.vertex_map[static_cast<size_t>(fv)];
            if (nu == nv) continue;
            std::vector<int> new_names(static_cast<size_t>(contracted.graph.vertex_count()), -1);
            for (int v = 0; v < g.vertex_count(); ++v) {
                int m = contracted.vertex_map[static_cast<size_t>(v)];
                if (new_names[static_cast<size_t>(m)] < 0) new_names[static_cast<size_t>(m)] = names[static_cast<size_t>(v)];
            }
            auto rest = run(contracted.graph, nu, nv, new_names);
            if (rest) {
                std::vector<ContractionStep> steps;
                // survivor keeps the lower endpoint's identity in contract_edge
                steps.push_back({names[static_cast<size_t>(e.u)], names[static_cast<size_t>(e.v)]});
                steps.insert(steps.end(), rest->begin(), rest->end());
                return steps;
            }
        }
        dead.insert(key);
        return std::nullopt;
    }
};

std::optional<ContractionSequence> exhaustive_search(const Graph& g, VertexPair f) {
    if (g.vertex_count() > 12) fail(ErrorCode::Unsupported, "exhaustive restricted search limited to 12 vertices");
    ExhaustiveSearch search;
    std::vector<int> names(static_cast<size_t>(g.vertex_count()));
    std::iota(names.begin(), names.end(), 0);
    auto steps = search.run(g, f.u, f.v, names);
    if (!steps) return std::nullopt;
    return ContractionSequence{*steps};
}

} // namespace

bool exhaustive_restricted_reducible(const Graph& g, VertexPair f) {
    if (g.has_edge(f.u, f.v)) fail(ErrorCode::NotANonEdge, "f must be a non-edge");
    return exhaustive_search(g, f).has_value();
}

std::optional<K5K222Reduction> contraction_reduction_to_k5_or_k222(const Graph& g) {
    bool k5 = has_minor(g, Graph::k5());
    bool k222 = !k5 && has_minor(g, Graph::k222());
    if (!k5 && !k222) return std::nullopt;

    Graph target = k5 ? Graph::k5() : Graph::k222();
    auto model = find_minor_model(g, target);
    if (!model) fail(ErrorCode::Internal, "minor reported but no model found");

    K5K222Reduction out;
    out.target_is_k5 = k5;
    WorkGraph work(g);
    std::vector<int> roots;
    std::vector<char> in_model(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& set : *model) {
        work.collapse_into(set[0], set);
        roots.push_back(set[0]);
        for (int v : set) in_model[static_cast<size_t>(v)] = 1;
    }
    // absorb leftover vertices into adjacent classes; isolate-and-remove the rest
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!work.alive[static_cast<size_t>(v)] || in_model[static_cast<size_t>(v)]) continue;
            if (work.adj[static_cast<size_t>(v)].empty()) continue;
            int target_nbr = *work.adj[static_cast<size_t>(v)].begin();
            work.contract(target_nbr, v);
            progressed = true;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (work.alive[static_cast<size_t>(v)] && !in_model[static_cast<size_t>(v)]) out.removed_isolated.push_back(v);

    out.seq.steps = work.steps;
    auto replayed = replay_contractions(g, out.seq, out.removed_isolated);
    if (!(replayed.minor == target)) {
        // only possible shape mismatch: labels permuted; compare canonically
        if (SmallGraph::from(replayed.minor).canonical_key() != SmallGraph::from(target).canonical_key())
            fail(ErrorCode::Internal, "k5/k222 reduction missed its target");
    }
    return out;
}

} // namespace ccs
