#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spanres/errors.hpp"
#include "spanres/graph_io.hpp"
#include "spanres/multigraph.hpp"

#include <random>
#include <sstream>

using namespace spanres;

TEST_CASE("reads the documented format") {
    std::istringstream in(
        "# a comment\n"
        "graph 3\n"
        "\n"
        "edge 0 1 1\n"
        "edge 1 2 3/2\n"
        "# trailing comment\n");
    Multigraph g = read_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[1].weight == Rational(3, 2));
}

TEST_CASE("writer output is canonical and deterministic") {
    Multigraph g(3);
    g.add_edge(0, 1, Rational(2, 4));
    g.add_edge(1, 2, Rational(5));
    CHECK(graph_to_string(g) ==
          "graph 3\n"
          "edge 0 1 1/2\n"
          "edge 1 2 5\n");
}

TEST_CASE("round trip preserves structure") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Multigraph g(n);
        const int edges = static_cast<int>(rng() % 12);
        for (int e = 0; e < edges && n >= 2; ++e) {
            const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            if (v >= u) ++v;
            g.add_edge(u, v, Rational(1 + static_cast<long long>(rng() % 9),
                                      1 + static_cast<long long>(rng() % 9)));
        }
        std::istringstream in(graph_to_string(g));
        CHECK(read_graph(in) == g);
    }
}

TEST_CASE("rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_graph(in), ParseError);
    };
    reject("");
    reject("edge 0 1 1\n");                       // edge before header
    reject("graph\n");                            // missing count
    reject("graph 2\ngraph 2\n");                 // duplicate header
    reject("graph 2\nedge 0 1\n");                // missing weight
    reject("graph 2\nedge 0 1 1 9\n");            // trailing token
    reject("graph 2\nedge 0 2 1\n");              // vertex out of range
    reject("graph 2\nedge 0 0 1\n");              // loop
    reject("graph 2\nedge 0 1 0\n");              // nonpositive weight
    reject("graph 2\nedge 0 1 -1/2\n");           // negative weight
    reject("graph 2\nedge 0 1 1/0\n");            // zero denominator
    reject("graph 2\nvertex 0\n");                // unknown directive
    reject("graph -1\n");                         // negative count
}

TEST_CASE("read_graph_file errors on missing files") {
    CHECK_THROWS_AS(read_graph_file("/no/such/file.graph"), ParseError);
}
