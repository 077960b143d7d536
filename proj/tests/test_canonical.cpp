#include <doctest.h>

#include <algorithm>
#include <random>

#include "chromatlas/canonical.hpp"
#include "chromatlas/graph6.hpp"
#include "oracles.hpp"

using namespace chromatlas;

TEST_SUITE_BEGIN("canonical");

TEST_CASE("isomorphic labelings collapse to one form") {
    Graph center0 = Graph::from_edges(3, {{0, 1}, {0, 2}});
    Graph center1 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph center2 = Graph::from_edges(3, {{0, 2}, {1, 2}});
    CHECK(canonical_form(center0) == canonical_form(center1));
    CHECK(canonical_form(center1) == canonical_form(center2));
}

TEST_CASE("non-isomorphic graphs stay apart") {
    Graph p3 = oracles::make_path(3);
    Graph k3 = oracles::make_complete(3);
    CHECK(canonical_form(p3) != canonical_form(k3));
    CHECK(canonical_graph6(oracles::make_cycle(6)) !=
          canonical_graph6(oracles::make_complete(4)));
}

TEST_CASE("every labeling of the paw graph maps to one output") {
    Graph paw = oracles::make_paw();
    std::string expected = canonical_graph6(paw);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK(canonical_graph6(permuted(paw, perm)) == expected);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(rng, n);
        std::vector<int> perm = oracles::random_permutation(rng, n);
        CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
    }
}

TEST_CASE("the canonical graph is an isomorphic relabeling") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(rng, n);
        Graph canon = canonical_form(g);
        auto a = degree_sequence(g);
        auto b = degree_sequence(canon);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(g.edge_count() == canon.edge_count());
    }
}

TEST_CASE("highly symmetric graphs canonicalize quickly") {
    // complete graphs and balanced multipartite graphs have huge
    // automorphism groups; the discovered-automorphism pruning must keep
    // the search tree small enough to finish instantly
    CHECK(canonical_form(oracles::make_complete(12)).edge_count() == 66);
    Graph k333(9);
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            if (i / 3 != j / 3) k333.add_edge(i, j);
    CHECK(canonical_form(k333).edge_count() == 27);
    CHECK(canonical_form(oracles::make_cycle(12)).edge_count() == 12);
}

TEST_SUITE_END();
