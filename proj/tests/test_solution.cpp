#include <doctest.h>

#include "mmfvs/rng.hpp"
#include "mmfvs/solution.hpp"
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

Graph biclique_2s(int s) {
    Graph g;
    for (int i = 0; i < s + 2; ++i)
        g.add_vertex();
    for (int i = 2; i < s + 2; ++i) {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    return g;
}

} // namespace

TEST_CASE("has_private_cycle") {
    Graph c5 = cycle(5);
    auto w = has_private_cycle(c5, {0}, 0);
    REQUIRE(w);
    CHECK(w->vertices.size() == 5);

    Graph k4 = complete(4);
    auto t = has_private_cycle(k4, {0, 1}, 0);
    REQUIRE(t);
    CHECK(t->vertices.size() == 3);
    CHECK(t->valid(k4));

    // All four legs of K_{2,4}: a leg plus the two (nonadjacent) hubs
    // induces a path, so no leg has a private cycle.
    Graph k24 = biclique_2s(4);
    VertexSet legs{2, 3, 4, 5};
    for (VertexId leg : legs)
        CHECK(!has_private_cycle(k24, legs, leg));

    CHECK_THROWS_AS(has_private_cycle(c5, {0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(has_private_cycle(k4, {0}, 0), std::invalid_argument);
}

TEST_CASE("is_minimal_fvs") {
    Graph c4 = cycle(4);
    auto v = is_minimal_fvs(c4, {0, 2});
    CHECK(v.status == MinimalityVerdict::Status::Redundant);
    CHECK(*v.redundant == 0); // smallest id reported

    CHECK(is_minimal_fvs(c4, {1}).minimal());

    auto nf = is_minimal_fvs(complete(4), {0});
    CHECK(nf.status == MinimalityVerdict::Status::NotFvs);
    CHECK(nf.cycle->vertices.size() == 3);
}

TEST_CASE("make_minimal") {
    Graph k4 = complete(4);
    FvsSolution s = make_minimal(k4, k4.vertex_set());
    CHECK(s.fvs == VertexSet{2, 3}); // smallest-id-first drops 0 then 1
    CHECK(s.verify(k4));

    Graph c4 = cycle(4);
    FvsSolution c = make_minimal(c4, c4.vertex_set());
    CHECK(c.size() == 1);

    // K_{2,s} with s=4: all legs form an fvs with exactly one
    // redundancy; one leg is dropped and the rest get 4-cycle
    // certificates through both hubs.
    Graph k24 = biclique_2s(4);
    FvsSolution legs = make_minimal(k24, {2, 3, 4, 5});
    CHECK(legs.size() == 3);
    CHECK(legs.verify(k24));

    CHECK_THROWS_AS(make_minimal(k4, {0}), std::invalid_argument);
}

TEST_CASE("make_minimal on acyclic input") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    FvsSolution s = make_minimal(p4, p4.vertex_set());
    CHECK(s.size() == 0);
    CHECK(s.forest == p4.vertex_set());
}

TEST_CASE("protected vertices") {
    // In C_4 every singleton is minimal; with {0,2} given and 0
    // protected, 2 is dropped instead of 0.
    Graph c4 = cycle(4);
    FvsSolution s = make_minimal(c4, {0, 2}, {0});
    CHECK(s.fvs == VertexSet{0});
    CHECK(!s.protected_dropped);

    // Protecting everything forces dropping a protected vertex and
    // raises the diagnostic flag.
    FvsSolution t = make_minimal(c4, {0, 2}, {0, 2});
    CHECK(t.size() == 1);
    CHECK(t.protected_dropped);
}

TEST_CASE("make_minimal properties on random graphs") {
    SplitMix64 rng(7);
    auto pairs = oracle::all_pairs(6);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracle::graph_from_edge_mask(
            6, rng.next() & ((1ull << pairs.size()) - 1));
        FvsSolution s = make_minimal(g, g.vertex_set());
        CHECK(is_minimal_fvs(g, s.fvs).minimal());
        CHECK(s.verify(g));
        for (int k = 0; k < 3; ++k) {
            FvsSolution r = make_minimal_seeded(g, g.vertex_set(), {}, rng.next());
            CHECK(is_minimal_fvs(g, r.fvs).minimal());
            CHECK(r.verify(g));
        }
        if (!g.is_acyclic())
            CHECK(s.size() >= 1);
    }
}

TEST_CASE("certify") {
    Graph c4 = cycle(4);
    FvsSolution s = certify(c4, {1});
    CHECK(s.certificates.count(1) == 1);
    CHECK(s.verify(c4));
    CHECK_THROWS_AS(certify(c4, {0, 2}), std::invalid_argument);
}
