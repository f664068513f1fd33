#ifndef MMFVS_APPROX_HPP
#define MMFVS_APPROX_HPP

#include <optional>

#include "mmfvs/graph.hpp"
#include "mmfvs/solution.hpp"

namespace mmfvs {

struct ApproxReport {
    enum class Branch { TrivialLargeS, GoodNeighbors, BadTrees, AcyclicInput };

    /// Minimal fvs of the original input graph, post-lifting.
    FvsSolution solution;
    Branch branch = Branch::TrivialLargeS;
    int reduced_n = 0;
    /// The high-forest-degree vertex driving the good/bad case split.
    std::optional<VertexId> witness_vertex;
    /// Size lower bound the chosen branch promises.
    double guarantee = 0.0;
};

const char* branch_name(ApproxReport::Branch b);

/// Large minimal fvs of a reduced graph whose deletion of u leaves a
/// forest: contracts forest edges not inside N(u) until every forest
/// vertex neighbors u, takes the larger side of each tree's
/// bipartition, and lifts back. Output size >= d(u)/2.
FvsSolution onevertex(const Graph& g, VertexId u);

/// Reduce, take any minimal fvs, lift. The reduced graph certifies the
/// n/(5*Delta) lower bound, hence an O(Delta) ratio.
ApproxReport approx_delta(const Graph& g);

/// The full polynomial-time approximation: arbitrary minimal fvs if it
/// is large, otherwise the good-neighbors or bad-trees construction
/// around a high-forest-degree vertex. Returns the largest of all
/// candidates built along the way.
ApproxReport approx_poly(const Graph& g);

} // namespace mmfvs

#endif
