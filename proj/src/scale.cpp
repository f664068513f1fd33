#include "mmfvs/scale.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "mmfvs/exact.hpp"
#include "mmfvs/reduce.hpp"

namespace mmfvs {

namespace {

using Mask = std::uint64_t;

struct GuessSearch {
    const Graph& g;
    std::vector<VertexId> ids;
    std::map<VertexId, int> idx;
    int k = 0;
    std::set<std::pair<Mask, Mask>> visited;
    FvsSolution best;
    std::uint64_t leaves = 0;

    explicit GuessSearch(const Graph& graph) : g(graph), ids(graph.vertices()) {
        if (ids.size() > 64)
            throw std::invalid_argument("graph too large for guessing search (n > 64)");
        for (std::size_t i = 0; i < ids.size(); ++i)
            idx[ids[i]] = static_cast<int>(i);
    }

    Mask to_mask(const VertexSet& xs) const {
        Mask m = 0;
        for (VertexId x : xs)
            m |= Mask{1} << idx.at(x);
        return m;
    }

    VertexSet undecided(const VertexSet& s_sol, const VertexSet& f_sol) const {
        VertexSet u = g.vertex_set();
        for (VertexId x : s_sol)
            u.erase(x);
        for (VertexId x : f_sol)
            u.erase(x);
        return u;
    }

    // Unique path between a and b inside the (acyclic) undecided region;
    // empty when disconnected.
    std::vector<VertexId> path_in(const VertexSet& region, VertexId a, VertexId b) const {
        std::map<VertexId, VertexId> parent{{a, -1}};
        std::vector<VertexId> queue{a};
        for (std::size_t qi = 0; qi < queue.size() && !parent.count(b); ++qi) {
            VertexId x = queue[qi];
            for (VertexId y : g.neighbors(x)) {
                if (!region.count(y) || parent.count(y))
                    continue;
                parent[y] = x;
                queue.push_back(y);
            }
        }
        std::vector<VertexId> path;
        if (!parent.count(b))
            return path;
        for (VertexId x = b; x != -1; x = parent.at(x))
            path.push_back(x);
        return path;
    }

    void step(const VertexSet& s_sol, const VertexSet& f_sol) {
        if (!visited.insert({to_mask(s_sol), to_mask(f_sol)}).second)
            return;
        // Invariant: the committed forest stays acyclic with at most 2k
        // components.
        if (static_cast<int>(g.components(f_sol).size()) > 2 * k)
            throw std::logic_error("committed forest exceeds 2k components");

        // First fvs vertex still short of two committed forest
        // neighbors: guess the missing neighbors.
        for (VertexId s : s_sol) {
            std::vector<VertexId> have, cands;
            for (VertexId x : g.neighbors(s)) {
                if (f_sol.count(x))
                    have.push_back(x);
            }
            if (have.size() >= 2)
                continue;
            VertexSet u = undecided(s_sol, f_sol);
            for (VertexId x : g.neighbors(s))
                if (u.count(x))
                    cands.push_back(x);
            int need = 2 - static_cast<int>(have.size());
            if (need == 1) {
                for (VertexId x : cands) {
                    VertexSet f2 = f_sol;
                    f2.insert(x);
                    if (g.is_acyclic(f2))
                        step(s_sol, f2);
                }
            } else {
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    for (std::size_t j = i + 1; j < cands.size(); ++j) {
                        VertexSet f2 = f_sol;
                        f2.insert(cands[i]);
                        f2.insert(cands[j]);
                        if (g.is_acyclic(f2))
                            step(s_sol, f2);
                    }
                }
            }
            return; // all continuations for this vertex were guessed
        }

        // Connector rounds: endpoint pairs in ascending (min, max)
        // order; the "no connector left" branch comes last.
        VertexSet u = undecided(s_sol, f_sol);
        std::size_t f_comps = g.components(f_sol).size();
        for (VertexId a : u) {
            for (VertexId b : u) {
                if (b < a)
                    continue;
                std::vector<VertexId> path = path_in(u, a, b);
                if (path.empty())
                    continue;
                VertexSet f2 = f_sol;
                f2.insert(path.begin(), path.end());
                if (!g.is_acyclic(f2))
                    continue;
                if (g.components(f2).size() >= f_comps)
                    continue;
                step(s_sol, f2);
            }
        }
        finish(s_sol, f_sol);
    }

    void finish(VertexSet s_sol, const VertexSet& f_sol) {
        // Forced rule: undecided vertices with two committed forest
        // neighbors can only be fvs vertices.
        for (VertexId x : undecided(s_sol, f_sol)) {
            int nf = 0;
            for (VertexId y : g.neighbors(x))
                if (f_sol.count(y))
                    ++nf;
            if (nf >= 2)
                s_sol.insert(x);
        }
        ++leaves;

        // Collapse the committed forest to a single vertex f and solve
        // the remaining apex-forest instance exactly.
        VertexSet u = undecided(s_sol, f_sol);
        Graph h;
        for (VertexId x : u)
            h.add_vertex(x);
        VertexId f = h.add_vertex();
        for (VertexId x : u) {
            bool touches = false;
            for (VertexId y : g.neighbors(x)) {
                if (u.count(y)) {
                    if (x < y)
                        h.add_edge(x, y);
                } else if (f_sol.count(y)) {
                    touches = true;
                }
            }
            if (touches)
                h.add_edge(x, f);
        }
        FvsSolution star = exact_apex_forest(h, f);

        VertexSet cand = s_sol;
        cand.insert(star.fvs.begin(), star.fvs.end());
        if (!is_fvs(g, cand))
            return;
        FvsSolution sol = make_minimal(g, cand);
        if (sol.size() > best.size())
            best = std::move(sol);
    }
};

} // namespace

SmallFvsResult smallfvs(const Graph& g, const VertexSet& S, int k_limit) {
    if (!is_fvs(g, S))
        throw std::invalid_argument("set is not an fvs");
    if (static_cast<int>(S.size()) > k_limit)
        throw std::invalid_argument("fvs larger than k_limit");

    SmallFvsResult res;
    if (g.is_acyclic()) {
        res.solution.forest = g.vertex_set();
        return res;
    }

    FvsSolution base = make_minimal(g, S);
    GuessSearch search(g);
    search.best = base;
    search.k = static_cast<int>(base.size());

    // Guess which part of the given fvs joins the committed forest.
    std::vector<VertexId> sv(base.fvs.begin(), base.fvs.end());
    const int k = static_cast<int>(sv.size());
    for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
        VertexSet f_sol, s_sol;
        for (int i = 0; i < k; ++i)
            ((pick >> i) & 1 ? f_sol : s_sol).insert(sv[i]);
        if (!g.is_acyclic(f_sol))
            continue;
        search.step(s_sol, f_sol);
    }

    const long double n = static_cast<long double>(g.num_vertices());
    res.state_bound = std::pow(2.0L, k) * std::pow(n, 2.0L * k) *
                      std::pow(n * n + 1.0L, 2.0L * k);
    res.explored_states = search.leaves;
    assert(static_cast<long double>(res.explored_states) <= res.state_bound);
    res.solution = std::move(search.best);
    return res;
}

SubexpResult subexp(const Graph& g, double r) {
    if (r < 1.0)
        throw std::invalid_argument("ratio must be >= 1");
    SubexpResult res;
    if (g.is_acyclic()) {
        res.solution.forest = g.vertex_set();
        res.early_return = true;
        return res;
    }
    FvsSolution base = make_minimal(g, g.vertex_set());
    const double n = static_cast<double>(g.num_vertices());
    if (static_cast<double>(base.size()) >= n / r) {
        res.solution = std::move(base);
        res.early_return = true;
        return res;
    }

    const int k = static_cast<int>(std::ceil(std::sqrt(r)));
    std::vector<VertexId> sv(base.fvs.begin(), base.fvs.end());
    std::vector<VertexSet> parts(k);
    const std::size_t q = sv.size() / k, rem = sv.size() % k;
    std::size_t at = 0;
    for (int i = 0; i < k; ++i) {
        std::size_t len = q + (static_cast<std::size_t>(i) < rem ? 1 : 0);
        for (std::size_t t = 0; t < len; ++t)
            parts[i].insert(sv[at++]);
    }

    res.solution = base;
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            VertexSet keep = parts[i];
            keep.insert(parts[j].begin(), parts[j].end());
            std::vector<std::pair<Graph, VertexId>> chain;
            Graph cur = g;
            for (VertexId s : base.fvs) {
                if (keep.count(s))
                    continue;
                chain.emplace_back(cur, s);
                cur = cur.delete_vertices({s});
            }
            SmallFvsResult pair_res =
                smallfvs(cur, keep, std::max<int>(1, static_cast<int>(keep.size())));
            FvsSolution sol = std::move(pair_res.solution);
            for (std::size_t c = chain.size(); c-- > 0;)
                sol = lift_through_deletion(chain[c].first, chain[c].second, sol);
            res.pairs.push_back({i, j, sol.size()});
            if (sol.size() > res.solution.size())
                res.solution = std::move(sol);
        }
    }
    return res;
}

} // namespace mmfvs
