#include <doctest.h>

#include "chromatlas/chromatic.hpp"
#include "chromatlas/enumerate.hpp"
#include "chromatlas/graph6.hpp"
#include "oracles.hpp"

using namespace chromatlas;
using oracles::make_complete;
using oracles::make_cycle;
using oracles::make_path;
using oracles::make_star;

namespace {

std::vector<std::uint64_t> q_of(const Graph& g, int length, ChromaticCache* cache = nullptr) {
    return coefficient_vector(chromatic_polynomial(g, cache), length).entries;
}

}  // namespace

TEST_SUITE_BEGIN("chromatic");

TEST_CASE("reference coefficient vectors") {
    ChromaticCache cache;
    CHECK(q_of(make_cycle(3), 10, &cache) ==
          std::vector<std::uint64_t>{1, 3, 2, 0, 0, 0, 0, 0, 0, 0});
    CHECK(q_of(make_complete(5), 10, &cache) ==
          std::vector<std::uint64_t>{1, 10, 35, 50, 24, 0, 0, 0, 0, 0});
    CHECK(q_of(make_cycle(10), 10, &cache) ==
          std::vector<std::uint64_t>{1, 10, 45, 120, 210, 252, 210, 120, 45, 9});
}

TEST_CASE("trees of one order share the binomial polynomial") {
    // x(x-1)^8 for any 9-vertex tree
    std::vector<std::uint64_t> expected{1, 8, 28, 56, 70, 56, 28, 8, 1, 0};
    CHECK(q_of(make_path(9), 10) == expected);
    CHECK(q_of(make_star(8), 10) == expected);
    Graph spider = Graph::from_edges(
        9, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {0, 6}, {6, 7}, {0, 8}});
    CHECK(q_of(spider, 10) == expected);
}

TEST_CASE("coefficient vector padding") {
    ChromaticPolynomial p = chromatic_polynomial(make_complete(2));
    CHECK(coefficient_vector(p, 2).entries == std::vector<std::uint64_t>{1, 1});
    CHECK(coefficient_vector(p, 5).entries == std::vector<std::uint64_t>{1, 1, 0, 0, 0});
    CHECK_THROWS(coefficient_vector(p, 1));
}

TEST_CASE("evaluation equals the coloring count") {
    ChromaticPolynomial k3 = chromatic_polynomial(make_complete(3));
    CHECK(evaluate(k3, 3) == 6);
    CHECK(evaluate(k3, 2) == 0);
    CHECK(evaluate(chromatic_polynomial(make_cycle(4)), 2) == 2);
}

TEST_CASE("evaluation matches brute force over small graphs") {
    ChromaticCache cache;
    for (int n = 1; n <= 5; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            ChromaticPolynomial p = chromatic_polynomial(g, &cache);
            for (int k = 1; k <= 3; ++k)
                CHECK(evaluate(p, k) == oracles::coloring_count(g, k));
        });
}

TEST_CASE("disconnected input factors over components") {
    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    ChromaticPolynomial p = chromatic_polynomial(two_triangles);
    // P(K3)^2 evaluated at 3 = 36
    CHECK(evaluate(p, 3) == 36);
    CHECK(p.degree() == 6);
}

TEST_CASE("girth-prefix identities") {
    ChromaticCache cache;
    CheckReport c10 = check_meredith(make_cycle(10), chromatic_polynomial(make_cycle(10), &cache));
    CHECK(c10.applicable);
    CHECK(c10.passed);

    CheckReport c4 = check_meredith(make_cycle(4), chromatic_polynomial(make_cycle(4), &cache));
    CHECK(c4.passed);

    CheckReport k4 = check_meredith(make_complete(4), chromatic_polynomial(make_complete(4), &cache));
    CHECK(k4.passed);

    CheckReport tree = check_meredith(make_path(5), chromatic_polynomial(make_path(5), &cache));
    CHECK_FALSE(tree.applicable);

    // a mismatching polynomial must be flagged
    ChromaticPolynomial wrong(4, {1, -4, 6, -2});
    CHECK_FALSE(check_meredith(make_cycle(4), wrong).passed);
}

TEST_CASE("first-four coefficient formulas") {
    ChromaticCache cache;
    CHECK(check_farrell4(make_complete(4), chromatic_polynomial(make_complete(4), &cache)).passed);
    CHECK(check_farrell4(make_cycle(4), chromatic_polynomial(make_cycle(4), &cache)).passed);
    CHECK(check_farrell4(make_path(7), chromatic_polynomial(make_path(7), &cache)).passed);

    ChromaticPolynomial wrong(4, {1, -6, 11, -5});
    CHECK_FALSE(check_farrell4(make_complete(4), wrong).passed);
}

TEST_CASE("log-concavity") {
    CHECK(is_log_concave(CoefficientVector{{1, 10, 45, 120, 210, 252, 210, 120, 45, 9}}));
    CHECK(is_log_concave(CoefficientVector{{1, 3, 2}}));
    CHECK_FALSE(is_log_concave(CoefficientVector{{1, 1, 5}}));
    CHECK(is_log_concave(CoefficientVector{{1, 3, 2, 0, 0}}));
}

TEST_CASE("coefficient bound") {
    CHECK(meredith_bound_check(CoefficientVector{{1, 10, 45, 120, 210, 252, 210, 120, 45, 9}}, 10));
    CHECK(meredith_bound_check(CoefficientVector{{1, 10, 35, 50, 24, 0, 0, 0, 0, 0}}, 10));
    CHECK(meredith_bound_check(CoefficientVector{{1, 1}}, 1));
    CHECK_FALSE(meredith_bound_check(CoefficientVector{{1, 10, 46}}, 10));
}

TEST_CASE("structural invariants hold exhaustively") {
    ChromaticCache cache;
    for (int n = 1; n <= 8; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            ChromaticPolynomial p = chromatic_polynomial(g, &cache);
            CHECK(p.degree() == g.order());
            CHECK(p.coefficient(g.order()) == 1);
            CHECK(evaluate(p, 0) == 0);
            if (g.edge_count() >= 1) CHECK(evaluate(p, 1) == 0);
            for (int i = 0; i < p.degree(); ++i) {
                std::int64_t c = p.coefficients_descending()[static_cast<std::size_t>(i)];
                if (c != 0) CHECK((i % 2 == 0) == (c > 0));
            }
            CoefficientVector q = coefficient_vector(p, 10);
            CHECK(is_log_concave(q));
            CHECK(meredith_bound_check(q, g.edge_count()));
        });
}

TEST_CASE("overflow is detected, not wrapped") {
    ChromaticPolynomial k10 = chromatic_polynomial(make_complete(10));
    CHECK_THROWS_AS(evaluate(k10, 1000000), OverflowError);
}

TEST_CASE("results are identical across caches and cache reuse") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                    {0, 2}, {1, 4}});
    ChromaticPolynomial bare = chromatic_polynomial(g);
    ChromaticCache cache;
    ChromaticPolynomial first = chromatic_polynomial(g, &cache);
    ChromaticPolynomial second = chromatic_polynomial(g, &cache);
    CHECK(bare == first);
    CHECK(first == second);
}

TEST_CASE("cache clears when full and stays correct") {
    ChromaticCache tiny(8);
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                    {0, 3}, {1, 4}, {2, 5}});
    ChromaticPolynomial with_tiny = chromatic_polynomial(g, &tiny);
    ChromaticPolynomial reference = chromatic_polynomial(g);
    CHECK(with_tiny == reference);
    CHECK(tiny.size() <= 8);
}

TEST_SUITE_END();
