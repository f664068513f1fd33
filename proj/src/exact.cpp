#include "mmfvs/exact.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mmfvs {

namespace {

using Mask = std::uint64_t;

/// Exhaustive search over partitions of V into (fvs, forest, undecided),
/// on a bitmask rendering of the graph. Branches undecided vertices into
/// the fvs first (we maximize), prunes on |S| + |U| <= best, forces into
/// the fvs every undecided vertex whose addition to the forest would
/// close a cycle, and abandons any branch where a committed fvs vertex
/// has no possible private cycle left.
struct Searcher {
    int n = 0;
    std::vector<Mask> adj;
    Mask all = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    Mask best_mask = 0;
    int best_size = -1;

    // Labels the components of G[m]; -1 outside m.
    void label_components(Mask m, std::array<int, 64>& comp) const {
        comp.fill(-1);
        int next = 0;
        Mask todo = m;
        while (todo) {
            int root = std::countr_zero(todo);
            Mask frontier = Mask{1} << root;
            Mask block = 0;
            while (frontier) {
                block |= frontier;
                Mask grown = 0;
                Mask f = frontier;
                while (f) {
                    int x = std::countr_zero(f);
                    f &= f - 1;
                    grown |= adj[x] & m;
                }
                frontier = grown & ~block;
            }
            Mask b = block;
            while (b) {
                comp[std::countr_zero(b)] = next;
                b &= b - 1;
            }
            ++next;
            todo &= ~block;
        }
    }

    // True iff x has two neighbors in the same component of the labeling.
    bool closes_cycle(int x, Mask m, const std::array<int, 64>& comp) const {
        std::array<bool, 64> hit{};
        Mask nb = adj[x] & m;
        while (nb) {
            int y = std::countr_zero(nb);
            nb &= nb - 1;
            int c = comp[y];
            if (hit[c])
                return true;
            hit[c] = true;
        }
        return false;
    }

    void dfs(Mask s, Mask f) {
        if (exhausted)
            return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        Mask u = all & ~s & ~f;

        std::array<int, 64> fcomp;
        label_components(f, fcomp);
        // Forced: undecided vertices that would close a cycle in the
        // forest can only end up in the fvs. The forest is unchanged by
        // this, so one pass reaches the fixpoint.
        Mask scan = u;
        while (scan) {
            int x = std::countr_zero(scan);
            scan &= scan - 1;
            if (closes_cycle(x, f, fcomp)) {
                s |= Mask{1} << x;
                u &= ~(Mask{1} << x);
            }
        }

        if (std::popcount(s) + std::popcount(u) <= best_size)
            return;

        // A fvs vertex whose neighbors all lie in distinct components of
        // G[F u U] can never acquire a private cycle.
        std::array<int, 64> fucomp;
        label_components(f | u, fucomp);
        Mask sv = s;
        while (sv) {
            int x = std::countr_zero(sv);
            sv &= sv - 1;
            if (!closes_cycle(x, f | u, fucomp))
                return;
        }

        if (u == 0) {
            // All fvs vertices have a private cycle in the final forest.
            int size = std::popcount(s);
            if (size > best_size) {
                best_size = size;
                best_mask = s;
            }
            return;
        }

        // Branch on the busiest undecided vertex.
        int pick = -1, pick_deg = -1;
        Mask uv = u;
        while (uv) {
            int x = std::countr_zero(uv);
            uv &= uv - 1;
            int d = std::popcount(adj[x] & (f | u));
            if (d > pick_deg) {
                pick_deg = d;
                pick = x;
            }
        }
        Mask bit = Mask{1} << pick;
        dfs(s | bit, f);
        dfs(s, f | bit);
    }
};

Searcher build_searcher(const Graph& g, const std::vector<VertexId>& ids) {
    if (ids.size() > 64)
        throw std::invalid_argument("graph too large for exact solver (n > 64)");
    Searcher sr;
    sr.n = static_cast<int>(ids.size());
    sr.adj.assign(sr.n, 0);
    std::map<VertexId, int> index;
    for (int i = 0; i < sr.n; ++i)
        index[ids[i]] = i;
    for (int i = 0; i < sr.n; ++i) {
        for (VertexId v : g.neighbors(ids[i]))
            sr.adj[i] |= Mask{1} << index.at(v);
        sr.all |= Mask{1} << i;
    }
    return sr;
}

VertexSet mask_to_set(Mask m, const std::vector<VertexId>& ids) {
    VertexSet out;
    while (m) {
        out.insert(ids[std::countr_zero(m)]);
        m &= m - 1;
    }
    return out;
}

Mask set_to_mask(const VertexSet& xs, const std::vector<VertexId>& ids) {
    Mask m = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (xs.count(ids[i]))
            m |= Mask{1} << i;
    return m;
}

} // namespace

ExactResult exact_mmfvs(const Graph& g, std::uint64_t budget) {
    ExactResult res;
    if (g.is_acyclic()) {
        res.solution.forest = g.vertex_set();
        return res;
    }
    std::vector<VertexId> ids = g.vertices();
    Searcher sr = build_searcher(g, ids);
    sr.budget = budget;

    FvsSolution seed = make_minimal(g, g.vertex_set());
    sr.best_mask = set_to_mask(seed.fvs, ids);
    sr.best_size = static_cast<int>(seed.size());

    sr.dfs(0, 0);
    res.solution = certify(g, mask_to_set(sr.best_mask, ids));
    res.optimal = !sr.exhausted;
    res.explored_nodes = sr.nodes;
    return res;
}

FvsSolution exact_apex_forest(const Graph& g, VertexId f) {
    VertexSet rest = g.vertex_set();
    if (!rest.count(f))
        throw std::invalid_argument("no such vertex");
    rest.erase(f);
    if (!g.is_acyclic(rest))
        throw std::invalid_argument("removing the apex does not leave a forest");
    if (g.is_acyclic()) {
        FvsSolution sol;
        sol.forest = g.vertex_set();
        return sol;
    }
    std::vector<VertexId> ids = g.vertices();
    Searcher sr = build_searcher(g, ids);
    sr.budget = std::numeric_limits<std::uint64_t>::max();

    FvsSolution seed = make_minimal(g, rest);
    sr.best_mask = set_to_mask(seed.fvs, ids);
    sr.best_size = static_cast<int>(seed.size());

    sr.dfs(0, set_to_mask({f}, ids));
    FvsSolution sol = certify(g, mask_to_set(sr.best_mask, ids));
    assert(!sol.fvs.count(f));
    return sol;
}

} // namespace mmfvs
