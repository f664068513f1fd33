#include <doctest.h>

#include "mmfvs/exact.hpp"
#include "mmfvs/gen.hpp"
#include "mmfvs/rng.hpp"
#include "oracle.hpp"

using namespace mmfvs;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Hub 0 adjacent to every vertex of the path 1-2-...-len.
Graph fan(int len) {
    Graph g;
    for (int i = 0; i <= len; ++i)
        g.add_vertex();
    for (int i = 1; i <= len; ++i) {
        g.add_edge(0, i);
        if (i > 1)
            g.add_edge(i - 1, i);
    }
    return g;
}

} // namespace

TEST_CASE("exact_mmfvs basics") {
    CHECK(exact_mmfvs(cycle(4)).solution.size() == 1);
    CHECK(exact_mmfvs(complete(4)).solution.size() == 2);
    // Edge uv plus four common neighbors.
    CHECK(exact_mmfvs(gen_tight_extremal(2)).solution.size() == 4);

    ExactResult r = exact_mmfvs(cycle(6));
    CHECK(r.optimal);
    CHECK(r.solution.size() == 1);
    CHECK(r.solution.verify(cycle(6)));
}

TEST_CASE("exact_apex_forest") {
    FvsSolution s = exact_apex_forest(fan(4), 0);
    CHECK(s.size() == 2);
    CHECK(!s.fvs.count(0));
    CHECK(s.verify(fan(4)));

    // f closes exactly one cycle with a single tree.
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {3, 0}, {3, 2}});
    CHECK(exact_apex_forest(g, 3).size() == 1);

    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(exact_apex_forest(star, 0).size() == 0);

    CHECK_THROWS_AS(exact_apex_forest(complete(4), 0), std::invalid_argument);
}

TEST_CASE("agreement with the naive enumerator") {
    SplitMix64 rng(3);
    auto pairs = oracle::all_pairs(9);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t mask = rng.next();
        mask &= rng.next(); // thin out for varied densities
        mask &= (1ull << pairs.size()) - 1;
        Graph g = oracle::graph_from_edge_mask(9, mask);
        ExactResult r = exact_mmfvs(g);
        CHECK(r.optimal);
        CHECK(static_cast<int>(r.solution.size()) == oracle::naive_mmfvs(g));
        CHECK(is_minimal_fvs(g, r.solution.fvs).minimal());
    }
}

TEST_CASE("apex solver matches the filtered naive enumerator") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        // Random forest on 1..8 plus apex 0.
        Graph g;
        for (int i = 0; i < 9; ++i)
            g.add_vertex();
        for (int i = 2; i < 9; ++i)
            if (rng.unit() < 0.8)
                g.add_edge(i, 1 + static_cast<VertexId>(rng.below(i - 1)));
        for (int i = 1; i < 9; ++i)
            if (rng.unit() < 0.5)
                g.add_edge(0, i);
        FvsSolution s = exact_apex_forest(g, 0);
        CHECK(static_cast<int>(s.size()) == oracle::naive_mmfvs_excluding(g, 0));
        CHECK(!s.fvs.count(0));
    }
}
