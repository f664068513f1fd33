#ifndef MMFVS_SOLUTION_HPP
#define MMFVS_SOLUTION_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "mmfvs/graph.hpp"

namespace mmfvs {

/// A minimal feedback vertex set together with its induced forest and a
/// private-cycle certificate for every fvs vertex.
struct FvsSolution {
    VertexSet fvs;
    VertexSet forest;
    std::map<VertexId, CycleWitness> certificates;
    /// Set when make_minimal had to drop a vertex the caller asserted
    /// was never redundant.
    bool protected_dropped = false;

    std::size_t size() const { return fvs.size(); }
    /// Re-validates the forest and every stored certificate against g.
    bool verify(const Graph& g) const;
};

struct MinimalityVerdict {
    enum class Status { Minimal, NotFvs, Redundant };
    Status status = Status::Minimal;
    std::optional<CycleWitness> cycle; // set for NotFvs
    std::optional<VertexId> redundant; // set for Redundant

    bool minimal() const { return status == Status::Minimal; }
};

bool is_fvs(const Graph& g, const VertexSet& S);

/// Cycle through u in G[(V\S) u {u}], if any. Requires u in S and S an
/// fvs; any cycle found necessarily passes through u since V\S induces
/// a forest.
std::optional<CycleWitness> has_private_cycle(const Graph& g, const VertexSet& S, VertexId u);

MinimalityVerdict is_minimal_fvs(const Graph& g, const VertexSet& S);

/// Shrinks the fvs S to a minimal one by repeatedly dropping the first
/// redundant vertex in removal order (default: ascending id). Vertices
/// in protect are only tested once no other vertex is redundant; if one
/// is still redundant then, it is dropped and the diagnostic flag set.
FvsSolution make_minimal(const Graph& g, const VertexSet& S, const VertexSet& protect = {});

/// Same, but tests candidates in a seeded random order.
FvsSolution make_minimal_seeded(const Graph& g, const VertexSet& S, const VertexSet& protect,
                                std::uint64_t seed);

/// Builds the certified solution object for an already-minimal fvs.
/// Throws if S is not a minimal fvs of g.
FvsSolution certify(const Graph& g, const VertexSet& S);

} // namespace mmfvs

#endif
