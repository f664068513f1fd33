#include "mmfvs/approx.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "mmfvs/reduce.hpp"

namespace mmfvs {

namespace {

struct RecordedOp {
    Graph before;
    ReductionStep step;
};

void record_delete(std::vector<RecordedOp>& ops, Graph& cur, VertexId u) {
    RecordedOp op;
    op.before = cur;
    op.step.kind = ReductionStep::Kind::Delete;
    op.step.u = u;
    cur = cur.delete_vertices({u});
    ops.push_back(std::move(op));
}

VertexId record_contract(std::vector<RecordedOp>& ops, Graph& cur, VertexId u, VertexId v) {
    RecordedOp op;
    op.before = cur;
    op.step.kind = ReductionStep::Kind::Contract;
    op.step.u = u;
    op.step.v = v;
    auto [next, w] = cur.contract_edge(u, v);
    op.step.w = w;
    cur = std::move(next);
    ops.push_back(std::move(op));
    return w;
}

/// Undoes recorded (unsafe) operations last-to-first via the
/// constructive liftings; the solution size never decreases.
FvsSolution undo_ops(const std::vector<RecordedOp>& ops, FvsSolution sol) {
    for (std::size_t i = ops.size(); i-- > 0;) {
        const RecordedOp& op = ops[i];
        if (op.step.kind == ReductionStep::Kind::Delete)
            sol = lift_through_deletion(op.before, op.step.u, sol);
        else
            sol = lift_through_contraction(op.before, op.step.u, op.step.v, op.step.w, sol);
    }
    return sol;
}

FvsSolution empty_solution(const Graph& g) {
    FvsSolution sol;
    sol.forest = g.vertex_set();
    return sol;
}

const FvsSolution& largest(const std::vector<FvsSolution>& candidates) {
    assert(!candidates.empty());
    const FvsSolution* best = &candidates.front();
    for (const FvsSolution& c : candidates)
        if (c.size() > best->size())
            best = &c;
    return *best;
}

} // namespace

const char* branch_name(ApproxReport::Branch b) {
    switch (b) {
    case ApproxReport::Branch::TrivialLargeS: return "trivial-large-S";
    case ApproxReport::Branch::GoodNeighbors: return "good-neighbors";
    case ApproxReport::Branch::BadTrees: return "bad-trees";
    case ApproxReport::Branch::AcyclicInput: return "acyclic-input";
    }
    return "?";
}

FvsSolution onevertex(const Graph& g, VertexId u) {
    if (!is_reduced(g))
        throw std::invalid_argument("graph is not reduced");
    VertexSet forest = g.vertex_set();
    if (!forest.count(u))
        throw std::invalid_argument("no such vertex");
    forest.erase(u);
    if (!g.is_acyclic(forest))
        throw std::invalid_argument("removing the apex does not leave a forest");

    const int du = g.degree(u);
    Graph cur = g;
    std::vector<RecordedOp> ops;

    // Contract forest edges vw with {v,w} not contained in N(u); each
    // step shrinks F \ N(u) and keeps d(u) unchanged.
    for (;;) {
        std::optional<std::pair<VertexId, VertexId>> pick;
        for (auto [a, b] : cur.edges()) {
            if (a == u || b == u)
                continue;
            if (cur.neighbors(u).count(a) && cur.neighbors(u).count(b))
                continue;
            if (!pick || std::make_pair(b, a) > std::make_pair(pick->second, pick->first))
                pick = {a, b};
        }
        if (!pick)
            break;
        record_contract(ops, cur, pick->first, pick->second);
        assert(cur.degree(u) == du);
    }

    // Now every forest vertex neighbors u. Per tree, take the larger
    // bipartition side; the smaller sides plus u induce a star.
    VertexSet fvs;
    VertexSet cur_forest = cur.vertex_set();
    cur_forest.erase(u);
    for (const auto& tree : cur.components(cur_forest)) {
        VertexSet color_a, color_b;
        std::vector<std::pair<VertexId, bool>> stack{{tree.front(), false}};
        VertexSet seen;
        while (!stack.empty()) {
            auto [x, col] = stack.back();
            stack.pop_back();
            if (!seen.insert(x).second)
                continue;
            (col ? color_b : color_a).insert(x);
            for (VertexId y : cur.neighbors(x))
                if (y != u && !seen.count(y))
                    stack.emplace_back(y, !col);
        }
        const VertexSet& side = color_b.size() >= color_a.size() ? color_b : color_a;
        fvs.insert(side.begin(), side.end());
    }

    FvsSolution sol = make_minimal(cur, fvs, fvs);
    assert(!sol.protected_dropped);
    sol = undo_ops(ops, std::move(sol));
    assert(static_cast<int>(2 * sol.size()) >= du);
    return sol;
}

ApproxReport approx_delta(const Graph& g) {
    ApproxReport rep;
    ReductionTrace trace = reduce(g);
    rep.reduced_n = static_cast<int>(trace.reduced.num_vertices());
    if (trace.reduced.num_vertices() == 0) {
        rep.solution = empty_solution(g);
        rep.branch = ApproxReport::Branch::AcyclicInput;
        rep.guarantee = 0.0;
        return rep;
    }
    FvsSolution sol = make_minimal(trace.reduced, trace.reduced.vertex_set());
    rep.solution = lift(trace, sol);
    rep.branch = ApproxReport::Branch::TrivialLargeS;
    rep.guarantee = static_cast<double>(rep.reduced_n) / (5.0 * trace.reduced.max_degree());
    return rep;
}

ApproxReport approx_poly(const Graph& g) {
    ApproxReport rep;
    ReductionTrace trace = reduce(g);
    const Graph& red = trace.reduced;
    const int n = static_cast<int>(red.num_vertices());
    rep.reduced_n = n;
    if (n == 0) {
        rep.solution = empty_solution(g);
        rep.branch = ApproxReport::Branch::AcyclicInput;
        return rep;
    }

    std::vector<FvsSolution> candidates;
    FvsSolution base = make_minimal(red, red.vertex_set());
    candidates.push_back(lift(trace, base));
    candidates.push_back(approx_delta(g).solution);

    const double threshold = std::cbrt(static_cast<double>(n));
    if (static_cast<double>(base.size()) >= threshold) {
        rep.branch = ApproxReport::Branch::TrivialLargeS;
        rep.guarantee = threshold;
        rep.solution = largest(candidates);
        return rep;
    }

    // Pick the fvs vertex with the most forest neighbors; by the
    // counting argument it has many when the trivial branch failed.
    VertexId u = -1;
    int u_fdeg = -1;
    for (VertexId s : base.fvs) {
        int d = 0;
        for (VertexId x : red.neighbors(s))
            if (base.forest.count(x))
                ++d;
        if (d > u_fdeg) {
            u_fdeg = d;
            u = s;
        }
    }
    rep.witness_vertex = u;

    // Good neighbor: shares its forest tree with another neighbor of u.
    auto trees = red.components(base.forest);
    std::map<VertexId, int> tree_of;
    for (std::size_t t = 0; t < trees.size(); ++t)
        for (VertexId x : trees[t])
            tree_of[x] = static_cast<int>(t);
    std::map<int, std::vector<VertexId>> nbrs_in_tree;
    for (VertexId x : red.neighbors(u))
        if (base.forest.count(x))
            nbrs_in_tree[tree_of.at(x)].push_back(x);
    int good = 0, bad = 0;
    for (const auto& [t, xs] : nbrs_in_tree)
        (xs.size() >= 2 ? good : bad) += static_cast<int>(xs.size());

    if (good >= bad) {
        rep.branch = ApproxReport::Branch::GoodNeighbors;
        Graph cur = red;
        std::vector<RecordedOp> ops;
        for (VertexId s : base.fvs)
            if (s != u)
                record_delete(ops, cur, s);
        ReductionTrace rered = reduce(cur);
        if (rered.reduced.has_vertex(u)) {
            FvsSolution cand = onevertex(rered.reduced, u);
            rep.guarantee = rered.reduced.degree(u) / 2.0;
            cand = lift(rered, cand);
            cand = undo_ops(ops, std::move(cand));
            candidates.push_back(lift(trace, cand));
        } else if (rered.reduced.num_vertices() > 0) {
            FvsSolution cand = make_minimal(rered.reduced, rered.reduced.vertex_set());
            cand = lift(rered, cand);
            cand = undo_ops(ops, std::move(cand));
            candidates.push_back(lift(trace, cand));
        }
        rep.solution = largest(candidates);
        return rep;
    }

    rep.branch = ApproxReport::Branch::BadTrees;
    // Bad trees of u, and the partner v sharing the most of them.
    std::vector<int> bad_trees;
    for (const auto& [t, xs] : nbrs_in_tree)
        if (xs.size() == 1)
            bad_trees.push_back(t);
    VertexId v = -1;
    int v_count = -1;
    for (VertexId s : base.fvs) {
        if (s == u)
            continue;
        int count = 0;
        for (int t : bad_trees) {
            bool adj = false;
            for (VertexId x : trees[t])
                if (red.neighbors(s).count(x))
                    adj = true;
            if (adj)
                ++count;
        }
        if (count > v_count) {
            v_count = count;
            v = s;
        }
    }
    if (v >= 0 && v_count > 0) {
        std::vector<int> kept;
        for (int t : bad_trees) {
            bool adj = false;
            for (VertexId x : trees[t])
                if (red.neighbors(v).count(x))
                    adj = true;
            if (adj)
                kept.push_back(t);
        }
        VertexSet keep{u, v};
        for (int t : kept)
            for (VertexId x : trees[t])
                keep.insert(x);

        Graph cur = red;
        std::vector<RecordedOp> ops;
        for (VertexId x : red.vertices())
            if (!keep.count(x))
                record_delete(ops, cur, x);

        // In each kept tree keep only the closest u'-v' path, then
        // contract it down to a single leg vertex.
        for (int t : kept) {
            const std::vector<VertexId>& tv = trees[t];
            VertexSet tset(tv.begin(), tv.end());
            // BFS inside the tree from each neighbor of u; the closest
            // (u', v') pair wins, ties by (min id, max id).
            std::optional<std::tuple<int, VertexId, VertexId>> best_key;
            VertexId ap = -1, bp = -1;
            std::map<VertexId, VertexId> best_parent;
            for (VertexId a : tv) {
                if (!red.neighbors(u).count(a))
                    continue;
                std::map<VertexId, VertexId> parent{{a, -1}};
                std::map<VertexId, int> dist{{a, 0}};
                std::vector<VertexId> queue{a};
                for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                    VertexId x = queue[qi];
                    for (VertexId y : red.neighbors(x)) {
                        if (!tset.count(y) || dist.count(y))
                            continue;
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
                for (VertexId b : tv) {
                    if (!red.neighbors(v).count(b) || !dist.count(b))
                        continue;
                    std::tuple<int, VertexId, VertexId> key{
                        dist[b], std::min(a, b), std::max(a, b)};
                    if (!best_key || key < *best_key) {
                        best_key = key;
                        ap = a;
                        bp = b;
                        best_parent = parent;
                    }
                }
            }
            assert(best_key);
            // Path vertices from bp back to ap.
            std::vector<VertexId> path;
            for (VertexId x = bp;; x = best_parent.at(x)) {
                path.push_back(x);
                if (x == ap)
                    break;
            }
            VertexSet on_path(path.begin(), path.end());
            for (VertexId x : tv)
                if (!on_path.count(x) && cur.has_vertex(x))
                    record_delete(ops, cur, x);
            // Contract the path to one vertex (internal vertices touch
            // neither u nor v by the closest-pair choice).
            VertexId head = path.back(); // == ap
            for (std::size_t i = path.size() - 1; i-- > 0;)
                head = record_contract(ops, cur, head, path[i]);
        }

        VertexSet legs = cur.vertex_set();
        legs.erase(u);
        legs.erase(v);
        const int s_count = static_cast<int>(legs.size());
        FvsSolution cand = make_minimal(cur, legs);
        rep.guarantee = std::max(0, s_count - 1);
        cand = undo_ops(ops, std::move(cand));
        candidates.push_back(lift(trace, cand));
    }
    rep.solution = largest(candidates);
    return rep;
}

} // namespace mmfvs
