#include <doctest.h>

#include <cmath>

#include "mmfvs/approx.hpp"
#include "mmfvs/gen.hpp"
#include "mmfvs/reduce.hpp"
#include "mmfvs/rng.hpp"
#include "oracle.hpp"

using namespace mmfvs;

namespace {

Graph complete(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

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

// u = 0 adjacent to v1,v3,v4,v6 of the tree v1-v2-v3, v2-v4-v5-v6.
Graph figure_one() {
    return Graph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 6}, {6, 0}, {2, 3}, {3, 0}, {0, 4}});
}

} // namespace

TEST_CASE("onevertex on the illustrated apex instance") {
    // The drawn graph has one contractible degree-2 pair left, so run
    // the safe rules first; the apex keeps degree 4 throughout and the
    // result reaches 3 > d(u)/2.
    Graph g = figure_one();
    ReductionTrace trace = reduce(g);
    REQUIRE(trace.reduced.has_vertex(0));
    CHECK(trace.reduced.degree(0) == 4);
    FvsSolution s = onevertex(trace.reduced, 0);
    CHECK(s.size() == 3);
    FvsSolution lifted = lift(trace, s);
    CHECK(lifted.size() >= 3);
    CHECK(lifted.verify(g));
}

TEST_CASE("onevertex on a fan") {
    FvsSolution s = onevertex(fan(4), 0);
    CHECK(s.fvs == VertexSet{2, 4});
    CHECK(s.verify(fan(4)));

    FvsSolution p6 = onevertex(fan(6), 0);
    CHECK(p6.size() == 3);
}

TEST_CASE("onevertex rejects bad inputs") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(onevertex(p3, 1), std::invalid_argument);        // not reduced
    CHECK_THROWS_AS(onevertex(complete(4), 0), std::invalid_argument); // no apex
}

TEST_CASE("approx_delta") {
    ApproxReport k4 = approx_delta(complete(4));
    CHECK(k4.solution.size() == 2);
    CHECK(k4.guarantee == doctest::Approx(4.0 / 15.0));

    Graph forest = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    ApproxReport f = approx_delta(forest);
    CHECK(f.solution.size() == 0);
    CHECK(f.branch == ApproxReport::Branch::AcyclicInput);
    CHECK(f.guarantee == 0.0);

    auto [tf, designated] = gen_tight_forest(2);
    ApproxReport t = approx_delta(tf);
    CHECK(t.guarantee == doctest::Approx(13.0 / (5.0 * tf.max_degree())));
    CHECK(t.solution.size() >= static_cast<std::size_t>(std::ceil(t.guarantee)));
    CHECK(t.solution.verify(tf));
}

TEST_CASE("approx_poly on K_{2,6} plus hub edge") {
    Graph g;
    for (int i = 0; i < 8; ++i)
        g.add_vertex();
    g.add_edge(0, 1);
    for (int i = 2; i < 8; ++i) {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    ApproxReport rep = approx_poly(g);
    CHECK(rep.solution.size() >= 5);
    CHECK(rep.solution.verify(g));
}

TEST_CASE("approx_poly trivial cases") {
    Graph forest = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(approx_poly(forest).solution.size() == 0);

    ApproxReport k4 = approx_poly(complete(4));
    CHECK(k4.solution.size() == 2);
    CHECK(k4.solution.verify(complete(4)));
}

TEST_CASE("approx_poly versus the oracle on random graphs") {
    SplitMix64 rng(23);
    auto pairs = oracle::all_pairs(10);
    for (int trial = 0; trial < 80; ++trial) {
        std::uint64_t mask = rng.next() & rng.next() & ((1ull << pairs.size()) - 1);
        Graph g = oracle::graph_from_edge_mask(10, mask);
        ApproxReport rep = approx_poly(g);
        CHECK(rep.solution.verify(g));
        if (!g.is_acyclic())
            CHECK(is_minimal_fvs(g, rep.solution.fvs).minimal());
        double mm = oracle::naive_mmfvs(g);
        CHECK(static_cast<double>(rep.solution.size()) >=
              mm / std::pow(10.0, 2.0 / 3.0) - 1e-9);
        // Never worse than the delta branch.
        CHECK(rep.solution.size() >= approx_delta(g).solution.size());
    }
}

TEST_CASE("approx_poly on tight-forest instances") {
    for (int n : {2, 4, 8}) {
        auto [g, designated] = gen_tight_forest(n);
        ApproxReport rep = approx_poly(g);
        CHECK(rep.solution.verify(g));
        CHECK(static_cast<double>(rep.solution.size()) >= rep.guarantee);
    }
}
