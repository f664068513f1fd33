#ifndef MMFVS_GEN_HPP
#define MMFVS_GEN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mmfvs/graph.hpp"
#include "mmfvs/solution.hpp"

namespace mmfvs {

/// Correspondence between a source instance and a gadget product:
/// per-pair independent sets for the independent-set reduction, and
/// per-edge path/cycle gadgets for the degree-6 reduction.
struct GadgetMap {
    Graph source;
    Graph product;

    /// I_uv for every source pair (u < v), adjacent pairs included.
    std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> pair_sets;

    struct EdgeGadget {
        VertexId e1 = -1;
        VertexId e2 = -1;
        std::array<VertexId, 6> c1{}; // cycles through e1
        std::array<VertexId, 6> c2{}; // cycles through e2
    };
    /// Per source edge (u < v).
    std::map<std::pair<VertexId, VertexId>, EdgeGadget> edge_gadgets;
};

/// Tightness family for the forest-neighbor counting bound: two
/// subdivided full binary trees with n leaves each, roots joined, plus
/// two vertices u,v adjacent to all 2n leaves. n must be a power of
/// two. Returns the graph and the designated fvs {u,v}.
std::pair<Graph, VertexSet> gen_tight_forest(int n);

/// Extremal family: K_n plus 2n private common neighbors per clique
/// pair; order n^3 - n^2 + n.
Graph gen_tight_extremal(int n);

/// Independent-set reduction product: n fresh common neighbors for
/// every pair of source vertices.
GadgetMap gen_mis_gadget(const Graph& g);

/// Minimal vertex cover of the source, lifted to a minimal fvs of the
/// mis-gadget product (the cover plus all pair sets, made minimal).
FvsSolution lift_vc_to_fvs(const GadgetMap& map, const VertexSet& cover);

/// Degree-6 reduction product: per source edge a u-e1-e2-v path plus
/// two 4-cycles on each of e1,e2 (14 fresh vertices per edge).
/// Requires max degree of the source <= 3.
GadgetMap gen_nph_gadget(const Graph& g);

/// Minimal vertex cover -> minimal fvs of size |cover| + 4|E|.
FvsSolution lift_vc_to_fvs_nph(const GadgetMap& map, const VertexSet& cover);

/// Normalizes a minimal fvs of the product away from the path vertices
/// (three size-non-decreasing rewrites), then intersects with the
/// source; yields a minimal vertex cover of size >= |fvs| - 4|E|.
VertexSet extract_vc_from_fvs_nph(const GadgetMap& map, const VertexSet& fvs);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
bool is_minimal_vertex_cover(const Graph& g, const VertexSet& cover);

/// G(n,p), deterministic for a fixed seed.
Graph gen_random_gnp(int n, double p, std::uint64_t seed);
/// Uniform graph with exactly m edges.
Graph gen_random_gnm(int n, int m, std::uint64_t seed);

/// Random graph with a planted fvs of size k: a random forest on n-k
/// vertices plus k extra vertices with random back-edges. The planted
/// set is verified to be an fvs before returning.
std::pair<Graph, VertexSet> gen_random_with_small_fvs(int n, int k, std::uint64_t seed);

} // namespace mmfvs

#endif
