#ifndef MMFVS_EXACT_HPP
#define MMFVS_EXACT_HPP

#include <cstdint>

#include "mmfvs/graph.hpp"
#include "mmfvs/solution.hpp"

namespace mmfvs {

struct ExactResult {
    FvsSolution solution;
    /// False when the node budget ran out; the solution is then the
    /// best one found so far (always a valid minimal fvs).
    bool optimal = true;
    std::uint64_t explored_nodes = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 200'000'000ULL;

/// Maximum minimal fvs by exhaustive search over S/F/undecided vertex
/// partitions, pruning branches where a committed fvs vertex can no
/// longer acquire a private cycle. Exact at desk scale (n <= 64
/// required); practical for n up to ~30.
ExactResult exact_mmfvs(const Graph& g, std::uint64_t budget = kDefaultExactBudget);

/// Maximum minimal fvs among those excluding f. Requires G - f acyclic.
FvsSolution exact_apex_forest(const Graph& g, VertexId f);

} // namespace mmfvs

#endif
