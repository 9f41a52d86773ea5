#include <catch_amalgamated.hpp>

#include <random>

#include "confspace/io.hpp"
#include "fixtures.hpp"

using namespace confspace;

TEST_CASE("graph round trip") {
    for (const Graph& g : {graphs::complete(5), graphs::lasso(), graphs::petersen(), graphs::star(3, 2)}) {
        const Graph back = parse_graph(write_graph(g));
        CHECK(back == g);
        CHECK(back.name() == g.name());
        CHECK(write_graph(back) == write_graph(g));
    }
}

TEST_CASE("graph parse errors") {
    CHECK_THROWS_AS(parse_graph("{"), InputError);
    CHECK_THROWS_AS(parse_graph("[1, 2]"), InputError);
    CHECK_THROWS_WITH(parse_graph(R"({"edges": []})"), "missing \"vertices\"");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 2})"), "missing \"edges\" array");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 2, "edges": [[0, 2]]})"), "edge endpoint out of range");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 2, "edges": [[1, 1]]})"), "self-loop");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 2, "edges": [[0]]})"), "edge must be a pair");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 2, "edges": [[0, 1], [1, 0]]})"), "graph is not simple");
    CHECK_THROWS_WITH(parse_graph(R"({"vertices": 4, "edges": [[0, 1], [2, 3]]})"), "graph not connected");
    CHECK_THROWS_AS(parse_graph(R"({"vertices": "three", "edges": []})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1]], "name": 7})"), InputError);

    // internal inputs may be multigraphs or disconnected
    const Graph multi = parse_graph(R"({"vertices": 2, "edges": [[0, 1], [1, 0]]})", true);
    CHECK(multi.multiplicity(0, 1) == 2);
    CHECK_NOTHROW(parse_graph(R"({"vertices": 4, "edges": [[0, 1], [2, 3]]})", true));
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), InputError);
}

TEST_CASE("potential round trip") {
    std::mt19937_64 rng(11);
    const CellComplex c(graphs::complete(4), 2);
    const GaugePotential p = testing::random_topological(c, rng);
    const GaugePotential back = parse_potential(write_potential(p), p.graph(), 2);
    CHECK(back == p);
    CHECK(write_potential(back) == write_potential(p));
}

TEST_CASE("potential entries") {
    const Graph g = graphs::cycle(3);
    // reversed direction negates, repeated entries add
    const GaugePotential p = parse_potential(
        R"([{"spectators": [2], "from": 1, "to": 0, "value": "1/3"},
            {"spectators": [2], "from": 0, "to": 1, "value": 1}])",
        g, 2);
    CHECK(p.value(Move{{2}, 0, 1}) == Rational(2, 3));
    CHECK(parse_potential("[]", g, 2).values().empty());

    CHECK_THROWS_WITH(parse_potential("{}", g, 2), "potential must be a JSON array");
    CHECK_THROWS_WITH(parse_potential(R"([{"from": 0, "to": 1, "value": "1"}])", g, 2),
                      "potential entry needs spectators, from, to, value");
    CHECK_THROWS_WITH(parse_potential(R"([{"spectators": [1], "from": 0, "to": 1, "value": "1"}])", g, 2),
                      "potential entry is not a 1-cell");
    CHECK_THROWS_WITH(parse_potential(R"([{"spectators": [2], "from": 0, "to": 0, "value": "1"}])", g, 2),
                      "potential entry is not a 1-cell");
    CHECK_THROWS_AS(parse_potential(R"([{"spectators": [2], "from": 0, "to": 1, "value": "1/0"}])", g, 2),
                    InputError);
    CHECK_THROWS_AS(parse_potential(R"([{"spectators": [2], "from": 0, "to": 1, "value": "x"}])", g, 2),
                    InputError);
}
