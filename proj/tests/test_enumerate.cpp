#include <doctest.h>

#include <set>
#include <sstream>

#include "chromatlas/canonical.hpp"
#include "chromatlas/enumerate.hpp"
#include "chromatlas/graph6.hpp"
#include "oracles.hpp"

using namespace chromatlas;

namespace {

std::vector<std::string> keys_of(int n, AugmentationOrder order) {
    std::vector<std::string> keys;
    enumerate_connected(n, [&](const Graph& g) { keys.push_back(to_graph6(g)); }, order);
    return keys;
}

}  // namespace

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("connected class counts") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        std::size_t count = 0;
        enumerate_connected(n, [&](const Graph&) { ++count; });
        CHECK(count == static_cast<std::size_t>(expected[n]));
    }
    CHECK_THROWS(enumerate_connected(0, [](const Graph&) {}));
    CHECK_THROWS(enumerate_connected(11, [](const Graph&) {}));
}

TEST_CASE("all-graph class counts") {
    const int expected[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::size_t count = 0;
        enumerate_all_graphs(n, [&](const Graph&) { ++count; });
        CHECK(count == static_cast<std::size_t>(expected[n]));
    }
}

TEST_CASE("certified against the labeled brute-force sweep") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> expected = oracles::labeled_connected_classes(n);
        std::set<std::string> produced;
        enumerate_connected(n, [&](const Graph& g) { produced.insert(to_graph6(g)); });
        CHECK(produced == expected);
    }
}

TEST_CASE("both augmentation orders emit the same set") {
    for (int n = 4; n <= 6; ++n) {
        auto forward = keys_of(n, AugmentationOrder::Forward);
        auto reverse = keys_of(n, AugmentationOrder::Reverse);
        CHECK(forward.size() == reverse.size());
        std::set<std::string> a(forward.begin(), forward.end());
        std::set<std::string> b(reverse.begin(), reverse.end());
        CHECK(a == b);
    }
}

TEST_CASE("no duplicates, connected, simple, canonical") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> seen;
        enumerate_connected(n, [&](const Graph& g) {
            CHECK(is_connected(g));
            std::string key = to_graph6(g);
            CHECK(canonical_graph6(g) == key);  // emitted in canonical labeling
            CHECK(seen.insert(key).second);
        });
    }
}

TEST_CASE("reruns are byte-identical") {
    CHECK(keys_of(6, AugmentationOrder::Forward) == keys_of(6, AugmentationOrder::Forward));
}

TEST_CASE("edge-count filter") {
    std::vector<Graph> all4;
    enumerate_connected(4, [&](const Graph& g) { all4.push_back(g); });
    CHECK(filter_by_edges(all4, 4).size() == 2);  // the 4-cycle and the paw
    CHECK(filter_by_edges(all4, 3).size() == 2);  // the two trees
    auto complete_only = filter_by_edges(all4, 6);
    REQUIRE(complete_only.size() == 1);
    CHECK(complete_only[0].edge_count() == 6);
}

TEST_CASE("graph6 stream reading") {
    std::istringstream ok("A_\nBw\n");
    std::vector<Graph> graphs = read_graph6_lines(ok);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edge_count() == 1);
    CHECK(graphs[1].edge_count() == 3);

    std::istringstream empty("");
    CHECK(read_graph6_lines(empty).empty());

    std::istringstream corrupt("A_\n\x01\x01\n");
    try {
        read_graph6_lines(corrupt);
        FAIL("expected an error on line 2");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_SUITE_END();
