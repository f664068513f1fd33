#ifndef MMFVS_GRAPH_HPP
#define MMFVS_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace mmfvs {

using VertexId = int;
using VertexSet = std::set<VertexId>;

class Graph;

/// A closed walk of >= 3 distinct vertices with consecutive (cyclic)
/// adjacency. Used as the certificate object for feedback vertex set
/// minimality checks.
struct CycleWitness {
    std::vector<VertexId> vertices;

    bool valid(const Graph& g) const;
};

/// Simple undirected graph with stable vertex ids. Ids of deleted
/// vertices are never reused; contractions mint fresh ids from a
/// monotone counter, so traces can refer to vertices of earlier graph
/// versions unambiguously.
///
/// Mutating operations return a new graph (value semantics); a Graph
/// value is never modified after construction by an operation.
class Graph {
public:
    Graph() = default;

    /// Graph on vertices 0..n-1 with the given edges.
    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Adds a vertex with a fresh id and returns it.
    VertexId add_vertex();
    /// Adds a vertex with a caller-chosen id (must not be live).
    void add_vertex(VertexId u);
    void add_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId u) const;
    bool has_edge(VertexId u, VertexId v) const;
    const VertexSet& neighbors(VertexId u) const;
    int degree(VertexId u) const;
    int max_degree() const;

    /// Live vertices in ascending id order.
    std::vector<VertexId> vertices() const;
    VertexSet vertex_set() const;
    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const;
    /// Edges as (min,max) pairs in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    VertexId next_id() const { return next_id_; }

    /// Returns the graph with xs and all incident edges removed.
    Graph delete_vertices(const VertexSet& xs) const;

    /// Contracts edge uv into a fresh vertex w adjacent to
    /// (N(u) u N(v)) \ {u,v}. Requires uv in E and N(u) n N(v) empty,
    /// so the result is always simple.
    std::pair<Graph, VertexId> contract_edge(VertexId u, VertexId v) const;

    /// Cycle search on the subgraph induced by xs: returns a witness if
    /// one exists, nullopt when G[xs] is a forest.
    std::optional<CycleWitness> forest_check(const VertexSet& xs) const;
    bool is_acyclic(const VertexSet& xs) const;
    bool is_acyclic() const;

    /// Connected components of G[xs], blocks ordered by smallest
    /// contained id, vertices ascending inside each block.
    std::vector<std::vector<VertexId>> components(const VertexSet& xs) const;

    /// Asserts adjacency symmetry, irreflexivity and live endpoints.
    void check_simple() const;

private:
    void require_vertex(VertexId u) const;

    std::map<VertexId, VertexSet> adj_;
    VertexId next_id_ = 0;
};

} // namespace mmfvs

#endif
