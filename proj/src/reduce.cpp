#include "mmfvs/reduce.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mmfvs {

std::optional<ReductionStep> first_applicable_rule(const Graph& g) {
    for (VertexId u : g.vertices()) {
        if (g.degree(u) <= 1) {
            ReductionStep s;
            s.kind = ReductionStep::Kind::Delete;
            s.u = u;
            s.degrees[u] = g.degree(u);
            return s;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) != 2 || g.degree(v) != 2)
            continue;
        bool disjoint = true;
        for (VertexId x : g.neighbors(u))
            if (x != v && g.neighbors(v).count(x))
                disjoint = false;
        if (!disjoint)
            continue;
        ReductionStep s;
        s.kind = ReductionStep::Kind::Contract;
        s.u = u;
        s.v = v;
        s.degrees[u] = 2;
        s.degrees[v] = 2;
        return s;
    }
    return std::nullopt;
}

bool is_reduced(const Graph& g) {
    return !first_applicable_rule(g).has_value();
}

ReductionTrace reduce(const Graph& g) {
    ReductionTrace trace;
    trace.original = g;
    Graph cur = g;
    while (auto step = first_applicable_rule(cur)) {
        if (step->kind == ReductionStep::Kind::Delete) {
            cur = cur.delete_vertices({step->u});
        } else {
            auto [next, w] = cur.contract_edge(step->u, step->v);
            step->w = w;
            cur = std::move(next);
        }
        trace.steps.push_back(std::move(*step));
    }
    trace.reduced = std::move(cur);
    return trace;
}

FvsSolution lift_through_deletion(const Graph& g, VertexId u, const FvsSolution& sol) {
    VertexSet with_u = sol.fvs;
    with_u.insert(u);
    FvsSolution lifted = make_minimal(g, with_u, sol.fvs);
    // Only u can lack a private cycle here, so the
    // result is a superset of the input fvs.
    assert(!lifted.protected_dropped);
    assert(lifted.size() >= sol.size());
    return lifted;
}

FvsSolution lift_through_contraction(const Graph& g, VertexId u, VertexId v, VertexId w,
                                     const FvsSolution& sol) {
    if (sol.fvs.count(w)) {
        VertexSet replaced = sol.fvs;
        replaced.erase(w);
        VertexSet protect = replaced;
        replaced.insert(u);
        replaced.insert(v);
        FvsSolution lifted = make_minimal(g, replaced, protect);
        assert(!lifted.protected_dropped);
        assert(lifted.size() >= sol.size());
        return lifted;
    }
    // w in the forest: the same set stays minimal in g.
    return certify(g, sol.fvs);
}

FvsSolution lift(const ReductionTrace& trace, const FvsSolution& sol) {
    // Replay forward to have the graph version before each step.
    std::vector<Graph> versions;
    versions.reserve(trace.steps.size() + 1);
    versions.push_back(trace.original);
    for (const ReductionStep& step : trace.steps) {
        const Graph& prev = versions.back();
        if (step.kind == ReductionStep::Kind::Delete)
            versions.push_back(prev.delete_vertices({step.u}));
        else
            versions.push_back(prev.contract_edge(step.u, step.v).first);
    }

    FvsSolution cur = sol;
    if (!is_minimal_fvs(versions.back(), cur.fvs).minimal())
        throw std::invalid_argument("solution is not a minimal fvs of the reduced graph");
    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const ReductionStep& step = trace.steps[i];
        const Graph& before = versions[i];
        if (step.kind == ReductionStep::Kind::Delete) {
            // Safe deletion removed a degree <= 1 vertex, which lies on
            // no cycle, so the set stays minimal as-is.
            cur = certify(before, cur.fvs);
        } else {
            cur = lift_through_contraction(before, step.u, step.v, step.w, cur);
        }
    }
    return cur;
}

std::string trace_to_text(const ReductionTrace& trace) {
    std::ostringstream out;
    for (const ReductionStep& step : trace.steps) {
        if (step.kind == ReductionStep::Kind::Delete)
            out << "D " << step.u << "\n";
        else
            out << "C " << step.u << " " << step.v << " " << step.w << "\n";
    }
    return out.str();
}

} // namespace mmfvs
