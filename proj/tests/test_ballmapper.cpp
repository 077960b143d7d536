#include <doctest.h>

#include <random>
#include <set>

#include <json.hpp>

#include "chromatlas/ballmapper.hpp"
#include "oracles.hpp"

using namespace chromatlas;

namespace {

PointCloud cloud_1d(const std::vector<double>& xs) {
    PointCloud cloud;
    cloud.n_rows = xs.size();
    cloud.n_cols = 1;
    cloud.data = xs;
    for (std::size_t i = 0; i < xs.size(); ++i)
        cloud.row_ids.push_back("p" + std::to_string(i));
    cloud.feature_labels = {"x"};
    return cloud;
}

PointCloud random_cloud(std::mt19937_64& rng, std::size_t points, std::size_t dims) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    PointCloud cloud;
    cloud.n_rows = points;
    cloud.n_cols = dims;
    cloud.data.resize(points * dims);
    for (auto& x : cloud.data) x = uni(rng);
    for (std::size_t i = 0; i < points; ++i) cloud.row_ids.push_back(std::to_string(i));
    for (std::size_t c = 0; c < dims; ++c) cloud.feature_labels.push_back("f");
    return cloud;
}

// all-pairs intersection test, independent of the per-point cover walk
std::set<std::pair<std::size_t, std::size_t>> brute_force_edges(
    const std::vector<std::vector<std::size_t>>& members) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            std::set<std::size_t> a(members[i].begin(), members[i].end());
            bool shared = false;
            for (std::size_t p : members[j])
                if (a.count(p)) {
                    shared = true;
                    break;
                }
            if (shared) edges.insert({i, j});
        }
    return edges;
}

}  // namespace

TEST_SUITE_BEGIN("ballmapper");

TEST_CASE("greedy net in row order") {
    PointCloud cloud = cloud_1d({0.0, 0.05, 1.0});
    std::vector<std::size_t> landmarks = epsilon_net(cloud, 0.1);
    CHECK(landmarks == std::vector<std::size_t>{0, 2});

    CHECK(epsilon_net(cloud, 10.0) == std::vector<std::size_t>{0});
    CHECK(epsilon_net(cloud_1d({0.3}), 0.5) == std::vector<std::size_t>{0});
    CHECK_THROWS(epsilon_net(cloud, 0.0));
    CHECK_THROWS(epsilon_net(cloud, -1.0));
}

TEST_CASE("cover membership") {
    PointCloud cloud = cloud_1d({0.0, 0.05, 1.0});
    auto members = build_cover(cloud, {0, 2}, 0.1);
    CHECK(members[0] == std::vector<std::size_t>{0, 1});
    CHECK(members[1] == std::vector<std::size_t>{2});

    PointCloud overlap = cloud_1d({0.0, 0.5, 1.0});
    auto shared = build_cover(overlap, {0, 2}, 0.55);
    CHECK(shared[0] == std::vector<std::size_t>{0, 1});
    CHECK(shared[1] == std::vector<std::size_t>{1, 2});

    auto everything = build_cover(cloud, {0}, 10.0);
    CHECK(everything[0].size() == 3);
}

TEST_CASE("nerve edges mark shared points") {
    PointCloud cloud = cloud_1d({0.0, 0.05, 1.0});
    BallMapperGraph bm = nerve(cloud, 0.1);
    CHECK(bm.landmarks.size() == 2);
    CHECK(bm.edges.empty());

    PointCloud overlap = cloud_1d({0.0, 0.5, 1.0});
    BallMapperGraph bm2 = nerve(overlap, 0.55);
    CHECK(bm2.landmarks.size() == 2);
    REQUIRE(bm2.edges.size() == 1);
    CHECK(bm2.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});

    BallMapperGraph single = nerve(cloud, 10.0);
    CHECK(single.landmarks.size() == 1);
    CHECK(single.edges.empty());
}

TEST_CASE("cover completeness and nerve equivalence on random clouds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t points = 50 + rng() % 450;
        std::size_t dims = 1 + rng() % 5;
        double eps = 0.05 + 0.3 * (static_cast<double>(rng() % 1000) / 1000.0);
        PointCloud cloud = random_cloud(rng, points, dims);
        BallMapperGraph bm = nerve(cloud, eps);

        std::vector<bool> covered(points, false);
        for (const auto& ms : bm.members)
            for (std::size_t p : ms) covered[p] = true;
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));

        for (std::size_t i = 0; i < bm.landmarks.size(); ++i) {
            bool own = false;
            for (std::size_t p : bm.members[i]) own |= (p == bm.landmarks[i]);
            CHECK(own);
        }

        std::set<std::pair<std::size_t, std::size_t>> expected = brute_force_edges(bm.members);
        std::set<std::pair<std::size_t, std::size_t>> produced(bm.edges.begin(), bm.edges.end());
        CHECK(produced == expected);
    }
}

TEST_CASE("net size shrinks as epsilon grows") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        PointCloud cloud = random_cloud(rng, 300, 3);
        double e1 = 0.05 + 0.2 * (static_cast<double>(rng() % 1000) / 1000.0);
        double e2 = e1 + 0.1;
        CHECK(epsilon_net(cloud, e1).size() >= epsilon_net(cloud, e2).size());
    }
}

TEST_CASE("deterministic output") {
    std::mt19937_64 rng(5);
    PointCloud cloud = random_cloud(rng, 200, 4);
    BallMapperGraph a = nerve(cloud, 0.2);
    BallMapperGraph b = nerve(cloud, 0.2);
    CHECK(a.landmarks == b.landmarks);
    CHECK(a.edges == b.edges);
    CHECK(a.members == b.members);
}

TEST_CASE("colorings average over ball members") {
    PointCloud cloud = cloud_1d({0.0, 0.05, 1.0});
    BallMapperGraph bm = nerve(cloud, 0.1);
    color_by(bm, {10.0, 20.0, 7.0}, "f");
    CHECK(bm.colorings.at("f").values[0] == doctest::Approx(15.0));
    CHECK(bm.colorings.at("f").values[1] == doctest::Approx(7.0));
    CHECK(bm.colorings.at("f").min == doctest::Approx(7.0));
    CHECK(bm.colorings.at("f").max == doctest::Approx(20.0));

    color_by(bm, {3.0, 3.0, 3.0}, "const");
    for (double v : bm.colorings.at("const").values) CHECK(v == doctest::Approx(3.0));

    CHECK_THROWS(color_by(bm, {1.0}, "short"));
}

TEST_CASE("json export round-trips through a parser") {
    PointCloud cloud = cloud_1d({0.0, 0.5, 1.0});
    BallMapperGraph bm = nerve(cloud, 0.55);
    color_by(bm, {1.0, 2.0, 3.0}, "m");
    nlohmann::json j = nlohmann::json::parse(ballmapper_to_json(bm, true));
    CHECK(j.at("epsilon").get<double>() == doctest::Approx(0.55));
    CHECK(j.at("metric") == "euclidean");
    CHECK(j.at("landmarks").size() == 2);
    CHECK(j.at("balls").size() == 2);
    CHECK(j.at("balls")[0].contains("members"));
    CHECK(j.at("edges").size() == 1);
    CHECK(j.at("colorings").contains("m"));

    nlohmann::json no_members = nlohmann::json::parse(ballmapper_to_json(bm, false));
    CHECK_FALSE(no_members.at("balls")[0].contains("members"));
}

TEST_CASE("dot export carries size and fill attributes") {
    PointCloud cloud = cloud_1d({0.0, 0.5, 1.0});
    BallMapperGraph bm = nerve(cloud, 0.55);
    color_by(bm, {1.0, 2.0, 3.0}, "m");
    std::string dot = ballmapper_to_dot(bm, "m");
    CHECK(dot.find("graph ballmapper") != std::string::npos);
    CHECK(dot.find("width=") != std::string::npos);
    CHECK(dot.find("fillcolor=\"#") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_SUITE_END();
