#include "mmfvs/gen.hpp"

#include <cassert>
#include <stdexcept>

#include "mmfvs/rng.hpp"

namespace mmfvs {

namespace {

// Full binary tree with n leaves (n a power of two); returns the root
// and fills edges/leaves.
VertexId build_tree(Graph& g, int n, std::vector<std::pair<VertexId, VertexId>>& edges,
                    std::vector<VertexId>& leaves) {
    VertexId root = g.add_vertex();
    if (n == 1) {
        leaves.push_back(root);
        return root;
    }
    VertexId left = build_tree(g, n / 2, edges, leaves);
    VertexId right = build_tree(g, n / 2, edges, leaves);
    edges.emplace_back(root, left);
    edges.emplace_back(root, right);
    return root;
}

} // namespace

std::pair<Graph, VertexSet> gen_tight_forest(int n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("n must be a power of two >= 2");
    Graph g;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> leaves;
    VertexId r1 = build_tree(g, n, edges, leaves);
    VertexId r2 = build_tree(g, n, edges, leaves);
    edges.emplace_back(r1, r2);
    // Subdivide every edge of the doubled tree.
    for (auto [a, b] : edges) {
        VertexId mid = g.add_vertex();
        g.add_edge(a, mid);
        g.add_edge(mid, b);
    }
    VertexId u = g.add_vertex();
    VertexId v = g.add_vertex();
    for (VertexId leaf : leaves) {
        g.add_edge(u, leaf);
        g.add_edge(v, leaf);
    }
    return {std::move(g), VertexSet{u, v}};
}

Graph gen_tight_extremal(int n) {
    if (n < 2)
        throw std::invalid_argument("n must be >= 2");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (int t = 0; t < 2 * n; ++t) {
                VertexId x = g.add_vertex();
                g.add_edge(x, u);
                g.add_edge(x, v);
            }
        }
    }
    return g;
}

GadgetMap gen_mis_gadget(const Graph& g) {
    const int n = static_cast<int>(g.num_vertices());
    if (n < 2)
        throw std::invalid_argument("source must have at least 2 vertices");
    GadgetMap map;
    map.source = g;
    map.product = g;
    std::vector<VertexId> vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            std::vector<VertexId>& set = map.pair_sets[{vs[i], vs[j]}];
            for (int t = 0; t < n; ++t) {
                VertexId x = map.product.add_vertex();
                map.product.add_edge(x, vs[i]);
                map.product.add_edge(x, vs[j]);
                set.push_back(x);
            }
        }
    }
    return map;
}

FvsSolution lift_vc_to_fvs(const GadgetMap& map, const VertexSet& cover) {
    if (!is_vertex_cover(map.source, cover))
        throw std::invalid_argument("not a vertex cover");
    VertexSet start = cover;
    for (const auto& [pair, set] : map.pair_sets)
        start.insert(set.begin(), set.end());
    return make_minimal(map.product, start);
}

GadgetMap gen_nph_gadget(const Graph& g) {
    if (g.max_degree() > 3)
        throw std::invalid_argument("source maximum degree exceeds 3");
    GadgetMap map;
    map.source = g;
    map.product = g;
    Graph& p = map.product;
    for (auto [u, v] : g.edges()) {
        GadgetMap::EdgeGadget gad;
        gad.e1 = p.add_vertex();
        gad.e2 = p.add_vertex();
        p.add_edge(u, gad.e1);
        p.add_edge(gad.e1, gad.e2);
        p.add_edge(gad.e2, v);
        for (int i = 0; i < 2; ++i) {
            auto& c = i == 0 ? gad.c1 : gad.c2;
            VertexId e = i == 0 ? gad.e1 : gad.e2;
            for (int t = 0; t < 6; ++t)
                c[t] = p.add_vertex();
            p.add_edge(e, c[0]);
            p.add_edge(c[0], c[1]);
            p.add_edge(c[1], c[2]);
            p.add_edge(c[2], e);
            p.add_edge(e, c[3]);
            p.add_edge(c[3], c[4]);
            p.add_edge(c[4], c[5]);
            p.add_edge(c[5], e);
        }
        map.edge_gadgets[{u, v}] = gad;
    }
    return map;
}

FvsSolution lift_vc_to_fvs_nph(const GadgetMap& map, const VertexSet& cover) {
    if (!is_minimal_vertex_cover(map.source, cover))
        throw std::invalid_argument("not a minimal vertex cover");
    VertexSet fvs = cover;
    for (const auto& [e, gad] : map.edge_gadgets) {
        fvs.insert(gad.c1[0]);
        fvs.insert(gad.c1[3]);
        fvs.insert(gad.c2[0]);
        fvs.insert(gad.c2[3]);
    }
    return certify(map.product, fvs);
}

VertexSet extract_vc_from_fvs_nph(const GadgetMap& map, const VertexSet& fvs) {
    const Graph& p = map.product;
    if (!is_minimal_fvs(p, fvs).minimal())
        throw std::invalid_argument("not a minimal fvs of the product");
    VertexSet cur = fvs;

    auto in = [&](VertexId x) { return cur.count(x) != 0; };
    for (;;) {
        std::size_t before = cur.size();
        bool applied = false;
        // Both path vertices in the set: swap the second one for the
        // hitters of its private 4-cycles.
        for (const auto& [e, gad] : map.edge_gadgets) {
            if (in(gad.e1) && in(gad.e2)) {
                cur.erase(gad.e2);
                cur.insert(gad.c2[0]);
                cur.insert(gad.c2[3]);
                applied = true;
                break;
            }
        }
        // A path vertex together with a covered endpoint.
        if (!applied) {
            for (const auto& [e, gad] : map.edge_gadgets) {
                if (!in(e.first) && !in(e.second))
                    continue;
                for (int i = 0; i < 2; ++i) {
                    VertexId ev = i == 0 ? gad.e1 : gad.e2;
                    const auto& c = i == 0 ? gad.c1 : gad.c2;
                    if (in(ev)) {
                        cur.erase(ev);
                        cur.insert(c[0]);
                        cur.insert(c[3]);
                        applied = true;
                        break;
                    }
                }
                if (applied)
                    break;
            }
        }
        // A path vertex with neither endpoint covered: pull the
        // adjacent endpoint in, then re-minimalize (loses at most two).
        if (!applied) {
            for (const auto& [e, gad] : map.edge_gadgets) {
                if (in(e.first) || in(e.second))
                    continue;
                for (int i = 0; i < 2; ++i) {
                    VertexId ev = i == 0 ? gad.e1 : gad.e2;
                    const auto& c = i == 0 ? gad.c1 : gad.c2;
                    VertexId endpoint = i == 0 ? e.first : e.second;
                    if (in(ev)) {
                        cur.erase(ev);
                        cur.insert(c[0]);
                        cur.insert(c[3]);
                        cur.insert(endpoint);
                        FvsSolution fixed =
                            make_minimal(p, cur, {c[0], c[3], endpoint});
                        assert(!fixed.protected_dropped);
                        cur = fixed.fvs;
                        applied = true;
                        break;
                    }
                }
                if (applied)
                    break;
            }
        }
        if (!applied)
            break;
        assert(cur.size() >= before);
        assert(is_minimal_fvs(p, cur).minimal());
    }

    VertexSet vc;
    for (VertexId x : map.source.vertices())
        if (cur.count(x))
            vc.insert(x);
    assert(cur.size() - vc.size() <= 4 * map.source.num_edges());
    if (!is_minimal_vertex_cover(map.source, vc))
        throw std::logic_error("normalization did not yield a minimal vertex cover");
    return vc;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
    for (auto [u, v] : g.edges())
        if (!cover.count(u) && !cover.count(v))
            return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& cover) {
    if (!is_vertex_cover(g, cover))
        return false;
    for (VertexId c : cover) {
        bool needed = false;
        for (VertexId y : g.neighbors(c))
            if (!cover.count(y))
                needed = true;
        if (!needed)
            return false;
    }
    return true;
}

Graph gen_random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("invalid parameters");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex();
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                g.add_edge(u, v);
    return g;
}

Graph gen_random_gnm(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw std::invalid_argument("invalid parameters");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    SplitMix64 rng(seed);
    shuffle(pairs, rng);
    for (int i = 0; i < m; ++i)
        g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

std::pair<Graph, VertexSet> gen_random_with_small_fvs(int n, int k, std::uint64_t seed) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("invalid parameters");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex();
    VertexSet planted;
    for (int i = 0; i < k; ++i)
        planted.insert(i);
    SplitMix64 rng(seed);
    // Random forest on the remaining vertices.
    for (int i = k + 1; i < n; ++i) {
        if (rng.unit() < 0.8) {
            VertexId j = k + static_cast<VertexId>(rng.below(i - k));
            g.add_edge(i, j);
        }
    }
    // Back-edges from the planted fvs to everything else.
    const double p = n > 0 ? std::min(1.0, 3.5 / n) : 0.0;
    for (int s = 0; s < k; ++s)
        for (int x = s + 1; x < n; ++x)
            if (rng.unit() < p)
                g.add_edge(s, x);
    VertexSet rest = g.vertex_set();
    for (VertexId s : planted)
        rest.erase(s);
    assert(g.is_acyclic(rest));
    return {std::move(g), std::move(planted)};
}

} // namespace mmfvs
