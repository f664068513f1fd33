#ifndef MMFVS_SCALE_HPP
#define MMFVS_SCALE_HPP

#include <cstdint>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/solution.hpp"

namespace mmfvs {

struct SmallFvsResult {
    FvsSolution solution;
    /// Number of complete guess states evaluated (after deduplication).
    std::uint64_t explored_states = 0;
    /// The 2^k * n^{2k} * (n^2+1)^{2k} ceiling on guesses.
    long double state_bound = 0.0L;
};

/// 3-approximation given an fvs S of size k, by exhaustively realizing
/// the guessing search: acyclic subsets of S into the committed forest,
/// one or two forest neighbors per committed fvs vertex, connector
/// paths through the undecided region, then an exact apex-forest solve
/// with the committed forest collapsed to a single vertex.
///
/// States are deduplicated on the (committed fvs, committed forest)
/// pair; enumeration order is ascending everywhere, so the result is
/// deterministic. Requires |S| <= k_limit.
SmallFvsResult smallfvs(const Graph& g, const VertexSet& S, int k_limit = 5);

struct SubexpPairRecord {
    int i = 0;
    int j = 0;
    std::size_t solution_size = 0;
};

struct SubexpResult {
    FvsSolution solution;
    /// True when the arbitrary minimal fvs already met the n/r target.
    bool early_return = false;
    std::vector<SubexpPairRecord> pairs;
};

/// r-approximation trade-off driver: arbitrary minimal fvs, early exit
/// if it reaches n/r, otherwise partition it into ceil(sqrt(r)) parts
/// and run smallfvs on every pair-induced subgraph, lifting each result
/// back through the deletions.
SubexpResult subexp(const Graph& g, double r);

} // namespace mmfvs

#endif
