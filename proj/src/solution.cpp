#include "mmfvs/solution.hpp"

#include <algorithm>
#include <stdexcept>

#include "mmfvs/rng.hpp"

namespace mmfvs {

bool FvsSolution::verify(const Graph& g) const {
    VertexSet all = g.vertex_set();
    VertexSet joined;
    std::set_union(fvs.begin(), fvs.end(), forest.begin(), forest.end(),
                   std::inserter(joined, joined.begin()));
    if (joined != all || joined.size() != fvs.size() + forest.size())
        return false;
    if (!g.is_acyclic(forest))
        return false;
    for (VertexId s : fvs) {
        auto it = certificates.find(s);
        if (it == certificates.end())
            return false;
        const CycleWitness& w = it->second;
        if (!w.valid(g))
            return false;
        bool through_s = false;
        for (VertexId x : w.vertices) {
            if (x == s)
                through_s = true;
            else if (!forest.count(x))
                return false;
        }
        if (!through_s)
            return false;
    }
    return true;
}

bool is_fvs(const Graph& g, const VertexSet& S) {
    VertexSet rest = g.vertex_set();
    for (VertexId u : S)
        rest.erase(u);
    return g.is_acyclic(rest);
}

std::optional<CycleWitness> has_private_cycle(const Graph& g, const VertexSet& S, VertexId u) {
    if (!S.count(u))
        throw std::invalid_argument("vertex not in fvs");
    VertexSet rest = g.vertex_set();
    for (VertexId s : S)
        rest.erase(s);
    if (!g.is_acyclic(rest))
        throw std::invalid_argument("set is not an fvs");
    rest.insert(u);
    return g.forest_check(rest);
}

MinimalityVerdict is_minimal_fvs(const Graph& g, const VertexSet& S) {
    VertexSet rest = g.vertex_set();
    for (VertexId u : S) {
        if (!g.has_vertex(u))
            throw std::invalid_argument("no such vertex");
        rest.erase(u);
    }
    MinimalityVerdict v;
    if (auto cyc = g.forest_check(rest)) {
        v.status = MinimalityVerdict::Status::NotFvs;
        v.cycle = *cyc;
        return v;
    }
    for (VertexId u : S) {
        rest.insert(u);
        bool has_cycle = g.forest_check(rest).has_value();
        rest.erase(u);
        if (!has_cycle) {
            v.status = MinimalityVerdict::Status::Redundant;
            v.redundant = u;
            return v;
        }
    }
    v.status = MinimalityVerdict::Status::Minimal;
    return v;
}

namespace {

FvsSolution make_minimal_ordered(const Graph& g, const VertexSet& S, const VertexSet& protect,
                                 const std::vector<VertexId>& order) {
    if (!is_fvs(g, S))
        throw std::invalid_argument("set is not an fvs");
    VertexSet cur = S;
    bool protected_dropped = false;
    auto redundant_in = [&](bool include_protected) -> std::optional<VertexId> {
        for (VertexId u : order) {
            if (!cur.count(u) || (protect.count(u) && !include_protected))
                continue;
            if (!has_private_cycle(g, cur, u))
                return u;
        }
        return std::nullopt;
    };
    for (;;) {
        if (auto u = redundant_in(false)) {
            cur.erase(*u);
            continue;
        }
        if (auto u = redundant_in(true)) {
            cur.erase(*u);
            protected_dropped = true;
            continue;
        }
        break;
    }
    FvsSolution sol = certify(g, cur);
    sol.protected_dropped = protected_dropped;
    return sol;
}

} // namespace

FvsSolution make_minimal(const Graph& g, const VertexSet& S, const VertexSet& protect) {
    std::vector<VertexId> order(S.begin(), S.end());
    return make_minimal_ordered(g, S, protect, order);
}

FvsSolution make_minimal_seeded(const Graph& g, const VertexSet& S, const VertexSet& protect,
                                std::uint64_t seed) {
    std::vector<VertexId> order(S.begin(), S.end());
    SplitMix64 rng(seed);
    shuffle(order, rng);
    return make_minimal_ordered(g, S, protect, order);
}

FvsSolution certify(const Graph& g, const VertexSet& S) {
    FvsSolution sol;
    sol.fvs = S;
    sol.forest = g.vertex_set();
    for (VertexId u : S) {
        if (!sol.forest.erase(u))
            throw std::invalid_argument("no such vertex");
    }
    if (auto cyc = g.forest_check(sol.forest))
        throw std::invalid_argument("set is not an fvs");
    for (VertexId u : S) {
        auto cyc = has_private_cycle(g, S, u);
        if (!cyc)
            throw std::invalid_argument("fvs is not minimal");
        sol.certificates.emplace(u, *cyc);
    }
    return sol;
}

} // namespace mmfvs
