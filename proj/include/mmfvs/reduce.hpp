#ifndef MMFVS_REDUCE_HPP
#define MMFVS_REDUCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/solution.hpp"

namespace mmfvs {

/// One safe-rule application. Delete requires d(u) <= 1 at application
/// time; Contract requires d(u) = d(v) = 2, uv an edge and disjoint
/// neighborhoods, with w the freshly minted vertex.
struct ReductionStep {
    enum class Kind { Delete, Contract };
    Kind kind;
    VertexId u = -1;
    VertexId v = -1;
    VertexId w = -1;
    /// Degrees of the touched vertices when the rule fired, for audit.
    std::map<VertexId, int> degrees;
};

struct ReductionTrace {
    Graph original;
    std::vector<ReductionStep> steps;
    Graph reduced;
};

/// First applicable safe rule, if any: the smallest-id vertex of degree
/// <= 1, else the smallest edge joining two degree-2 vertices with
/// disjoint neighborhoods.
std::optional<ReductionStep> first_applicable_rule(const Graph& g);

/// True iff no safe rule applies.
bool is_reduced(const Graph& g);

/// Applies the safe rules exhaustively, deletions (ascending id) before
/// contractions, rescanning after every mutation. The value of the
/// optimum is preserved at every step.
ReductionTrace reduce(const Graph& g);

/// Undoes a single (not necessarily safe) vertex deletion: given a
/// minimal fvs of g - u, returns a minimal fvs of g of the same or
/// larger size. Only u itself may be dropped while re-minimalizing.
FvsSolution lift_through_deletion(const Graph& g, VertexId u, const FvsSolution& sol);

/// Undoes a contraction of uv into w: given a minimal fvs of g/uv,
/// returns a minimal fvs of g of the same or larger size. If w was in
/// the fvs, it is replaced by {u,v} and at most one vertex is dropped.
FvsSolution lift_through_contraction(const Graph& g, VertexId u, VertexId v, VertexId w,
                                     const FvsSolution& sol);

/// Lifts a minimal fvs of trace.reduced back to trace.original by
/// undoing the recorded steps last-to-first.
FvsSolution lift(const ReductionTrace& trace, const FvsSolution& sol);

/// Line-oriented debug log: "D u" per deletion, "C u v w" per
/// contraction.
std::string trace_to_text(const ReductionTrace& trace);

} // namespace mmfvs

#endif
