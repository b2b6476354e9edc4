#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "turan/graph_io.hpp"

using namespace turan;

TEST_SUITE("graph_io") {

TEST_CASE("known graph6 strings") {
    CHECK(to_graph6(graphs::complete(4)) == "C~");
    CHECK(to_graph6(graphs::cycle(4)) == "Cl");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(graphs::petersen()) == oracle::graph6(graphs::petersen()));
}

TEST_CASE("graph6 agrees with the bitwise reference and round-trips") {
    std::mt19937 rng(3);
    for (int n : {2, 5, 6, 7, 12, 13, 31, 62, 63, 64}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Graph g = oracle::random_graph(n, 0.3, rng);
            const std::string text = to_graph6(g);
            CHECK(text == oracle::graph6(g));
            CHECK(from_graph6(text) == g);
        }
    }
}

TEST_CASE("graph6 header for 63 and 64 vertices") {
    CHECK(to_graph6(Graph(63)).substr(0, 4) == std::string("~??~"));
    CHECK(to_graph6(Graph(64)).substr(0, 4) == std::string("~?@?"));
}

TEST_CASE("graph6 decoding accepts the optional header and newline") {
    CHECK(from_graph6(">>graph6<<C~\n") == graphs::complete(4));
    CHECK(from_graph6("Cl") == graphs::cycle(4));
}

TEST_CASE("malformed graph6 is rejected") {
    CHECK_THROWS_AS(from_graph6(""), GraphError);
    CHECK_THROWS_AS(from_graph6("C"), GraphError);
    CHECK_THROWS_AS(from_graph6("C~~"), GraphError);
    CHECK_THROWS_AS(from_graph6("C\x20"), GraphError);
    // Three vertices use three bits; the last three must be zero.
    CHECK_THROWS_AS(from_graph6("B\x7e"), GraphError);
}

TEST_CASE("JSON edge lists round-trip") {
    const Graph g = graphs::petersen();
    const auto j = to_json(g);
    CHECK(j["n"] == 10);
    CHECK(j["edges"].size() == 15);
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 3}}), GraphError);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 3}, {"edges", {{0, 3}}}}), GraphError);
}

}  // TEST_SUITE
