#include <doctest.h>

#include <stdexcept>

#include "mmfvs/io.hpp"

using namespace mmfvs;

TEST_CASE("parse_graph") {
    Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);
    CHECK(k3.has_edge(0, 2)); // 1-based external, 0-based internal

    Graph iso = parse_graph("p edge 2 0\n");
    CHECK(iso.num_vertices() == 2);
    CHECK(iso.num_edges() == 0);

    Graph commented = parse_graph("c hello\np edge 2 1\nc mid\ne 1 2\n");
    CHECK(commented.num_edges() == 1);
}

TEST_CASE("parse_graph errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 1\n"), "line 2: self-loop",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"),
                         "line 3: duplicate edge", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 3\n"),
                         "line 2: endpoint out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("p vertex 2 1\n"), "line 1: malformed header",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), std::invalid_argument);
}

TEST_CASE("round trip") {
    std::string text = "p edge 4 3\ne 1 2\ne 1 4\ne 2 3\n";
    Graph g = parse_graph(text);
    CHECK(serialize_graph(g) == text); // ascending edge order is canonical
    std::string with_comment = serialize_graph(g, {"origin"});
    CHECK(with_comment.rfind("c origin\n", 0) == 0);
    CHECK(parse_graph(with_comment).edges() == g.edges());
}

TEST_CASE("solution files") {
    Graph g = parse_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    VertexSet s = parse_solution("# a comment\n1\n3 # trailing\n", g);
    CHECK(s == VertexSet{0, 2});
    CHECK(serialize_solution(s) == "1\n3\n");
    CHECK_THROWS_AS(parse_solution("9\n", g), std::invalid_argument);
}
