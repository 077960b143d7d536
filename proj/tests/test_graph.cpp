#include <doctest.h>

#include <numeric>
#include <set>

#include "chromatlas/enumerate.hpp"
#include "chromatlas/graph.hpp"
#include "oracles.hpp"

using namespace chromatlas;
using oracles::make_complete;
using oracles::make_cycle;
using oracles::make_path;
using oracles::make_paw;
using oracles::make_star;

TEST_SUITE_BEGIN("graph");

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(make_complete(4)) == std::vector<int>{3, 3, 3, 3});
    CHECK(degree_sequence(make_path(4)) == std::vector<int>{1, 2, 2, 1});
    CHECK(degree_sequence(make_star(3)) == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("handshake over enumerated graphs") {
    for (int n = 1; n <= 6; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            auto degs = degree_sequence(g);
            CHECK(std::accumulate(degs.begin(), degs.end(), 0) == 2 * g.edge_count());
        });
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_complete(5)));
    CHECK(is_connected(Graph(1)));
    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));
}

TEST_CASE("girth") {
    CHECK(girth(make_cycle(5)) == 5);
    CHECK(girth(make_cycle(6)) == 6);
    CHECK_FALSE(girth(make_path(4)).has_value());
    CHECK_FALSE(girth(make_star(4)).has_value());
    CHECK(girth(make_paw()) == 3);
    Graph k4_minus = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK(girth(k4_minus) == 3);
}

TEST_CASE("cycle counting") {
    CHECK(count_cycles_of_length(make_cycle(10), 10) == 1);
    CHECK(count_cycles_of_length(make_complete(4), 3) == 4);
    CHECK(count_cycles_of_length(make_path(5), 3) == 0);
    CHECK(count_cycles_of_length(make_path(5), 4) == 0);
    CHECK(count_cycles_of_length(make_complete(5), 3) == 10);
    // C(5,4) * 3 four-cycles in K5
    CHECK(count_cycles_of_length(make_complete(5), 4) == 15);
}

TEST_CASE("subgraph census") {
    SubgraphCensus k4 = subgraph_census(make_complete(4));
    CHECK(k4.triangles == 4);
    CHECK(k4.induced_c4 == 0);
    CHECK(k4.k4 == 1);

    SubgraphCensus c4 = subgraph_census(make_cycle(4));
    CHECK(c4.triangles == 0);
    CHECK(c4.induced_c4 == 1);
    CHECK(c4.k4 == 0);

    SubgraphCensus c5 = subgraph_census(make_cycle(5));
    CHECK(c5.triangles == 0);
    CHECK(c5.induced_c4 == 0);
    CHECK(c5.k4 == 0);
}

TEST_CASE("census triangle count agrees with the cycle counter") {
    for (int n = 3; n <= 7; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            CHECK(subgraph_census(g).triangles == count_cycles_of_length(g, 3));
        });
}

TEST_CASE("clique number") {
    CHECK(clique_number(make_complete(5)) == 5);
    CHECK(clique_number(make_cycle(5)) == 2);
    CHECK(clique_number(make_path(3)) == 2);
    CHECK(clique_number(Graph(1)) == 1);
}

TEST_CASE("block decomposition") {
    BlockDecomposition paw = block_decomposition(make_paw());
    CHECK(paw.blocks.size() == 2);
    CHECK(paw.bridges.size() == 1);
    CHECK(paw.cut_vertices == (1u << 2));

    CHECK(block_decomposition(make_complete(4)).blocks.size() == 1);

    BlockDecomposition path = block_decomposition(make_path(4));
    CHECK(path.blocks.size() == 3);
    CHECK(path.bridges.size() == 3);

    CHECK_THROWS(block_decomposition(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("blocks partition the edge set") {
    for (int n = 2; n <= 7; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            BlockDecomposition dec = block_decomposition(g);
            std::set<std::pair<int, int>> seen;
            std::size_t total = 0;
            for (const Block& b : dec.blocks)
                for (auto [u, v] : b.edges) {
                    seen.insert({std::min(u, v), std::max(u, v)});
                    ++total;
                }
            CHECK(total == static_cast<std::size_t>(g.edge_count()));
            CHECK(seen.size() == static_cast<std::size_t>(g.edge_count()));
            for (auto [u, v] : seen) CHECK(g.has_edge(u, v));
        });
}

TEST_CASE("bridges are exactly the two-vertex blocks") {
    for (int n = 2; n <= 6; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            BlockDecomposition dec = block_decomposition(g);
            std::size_t two_vertex = 0;
            for (const Block& b : dec.blocks)
                if (b.edges.size() == 1) ++two_vertex;
            CHECK(two_vertex == dec.bridges.size());
        });
}

TEST_CASE("edge deletion and contraction") {
    Graph k3 = make_complete(3);
    Graph contracted = contract_edge(k3, 0, 1);
    CHECK(contracted.order() == 2);
    CHECK(contracted.edge_count() == 1);

    Graph deleted = delete_edge(make_cycle(4), 0, 1);
    CHECK(deleted.order() == 4);
    CHECK(deleted.edge_count() == 3);
    CHECK(is_connected(deleted));

    // contracting one edge of C4 gives the triangle: the two surviving
    // vertices were adjacent in the cycle (C_n / e = C_{n-1})
    Graph c4c = contract_edge(make_cycle(4), 0, 1);
    CHECK(c4c.order() == 3);
    CHECK(c4c.edge_count() == 3);
    Graph c5c = contract_edge(make_cycle(5), 2, 3);
    CHECK(c5c == make_cycle(4));

    CHECK_THROWS(delete_edge(make_path(3), 0, 2));
    CHECK_THROWS(contract_edge(make_path(3), 0, 2));
}

TEST_CASE("contraction keeps the smaller index and compacts the rest") {
    // path 0-1-2-3, contract {1,2}: merged vertex 1, old 3 becomes 2
    Graph g = contract_edge(make_path(4), 1, 2);
    CHECK(g.order() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(contract_edge(make_path(4), 2, 1) == g);  // order of endpoints irrelevant
}

TEST_CASE("complement and induced subgraph") {
    CHECK(complement(make_complete(4)).edge_count() == 0);
    CHECK(complement(complement(make_paw())) == make_paw());
    Graph sub = induced_subgraph(make_paw(), 0b0111);  // the triangle
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 3);
}

TEST_SUITE_END();
