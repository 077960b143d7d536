#include "chromatlas/ballmapper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "chromatlas/records.hpp"

namespace chromatlas {

namespace {

double squared_distance(const PointCloud& cloud, std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t c = 0; c < cloud.n_cols; ++c) {
        double d = cloud.at(a, c) - cloud.at(b, c);
        s += d * d;
    }
    return s;
}

}  // namespace

std::vector<std::size_t> epsilon_net(const PointCloud& cloud, double epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    const double eps2 = epsilon * epsilon;
    std::vector<std::size_t> landmarks;
    for (std::size_t p = 0; p < cloud.n_rows; ++p) {
        bool covered = false;
        for (std::size_t l : landmarks)
            if (squared_distance(cloud, p, l) <= eps2) {
                covered = true;
                break;
            }
        if (!covered) landmarks.push_back(p);
    }
    return landmarks;
}

std::vector<std::vector<std::size_t>> build_cover(const PointCloud& cloud,
                                                  const std::vector<std::size_t>& landmarks,
                                                  double epsilon) {
    const double eps2 = epsilon * epsilon;
    std::vector<std::vector<std::size_t>> members(landmarks.size());
    for (std::size_t p = 0; p < cloud.n_rows; ++p)
        for (std::size_t i = 0; i < landmarks.size(); ++i)
            if (squared_distance(cloud, p, landmarks[i]) <= eps2)
                members[i].push_back(p);
    return members;
}

BallMapperGraph nerve_from_cover(double epsilon, std::vector<std::size_t> landmarks,
                                 std::vector<std::vector<std::size_t>> members) {
    BallMapperGraph bm;
    bm.epsilon = epsilon;
    bm.landmarks = std::move(landmarks);
    bm.members = std::move(members);

    // per point, the balls containing it; every covering pair is an edge
    std::size_t max_point = 0;
    for (const auto& ms : bm.members)
        for (std::size_t p : ms) max_point = std::max(max_point, p + 1);
    std::vector<std::vector<std::size_t>> covering(max_point);
    for (std::size_t i = 0; i < bm.members.size(); ++i)
        for (std::size_t p : bm.members[i]) covering[p].push_back(i);

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& balls : covering)
        for (std::size_t a = 0; a < balls.size(); ++a)
            for (std::size_t b = a + 1; b < balls.size(); ++b)
                edges.insert({balls[a], balls[b]});
    bm.edges.assign(edges.begin(), edges.end());
    return bm;
}

BallMapperGraph nerve(const PointCloud& cloud, double epsilon) {
    std::vector<std::size_t> landmarks = epsilon_net(cloud, epsilon);
    std::vector<std::vector<std::size_t>> members = build_cover(cloud, landmarks, epsilon);
    return nerve_from_cover(epsilon, std::move(landmarks), std::move(members));
}

void color_by(BallMapperGraph& bm, const std::vector<double>& values,
              const std::string& name) {
    std::size_t needed = 0;
    for (const auto& ms : bm.members)
        for (std::size_t p : ms) needed = std::max(needed, p + 1);
    if (values.size() < needed)
        throw std::invalid_argument("coloring values shorter than the point cloud");

    BallMapperGraph::Coloring coloring;
    coloring.values.reserve(bm.members.size());
    for (const auto& ms : bm.members) {
        double sum = 0.0;
        for (std::size_t p : ms) sum += values[p];
        coloring.values.push_back(ms.empty() ? 0.0 : sum / static_cast<double>(ms.size()));
    }
    coloring.min = values.empty() ? 0.0 : values[0];
    coloring.max = coloring.min;
    for (double v : values) {
        coloring.min = std::min(coloring.min, v);
        coloring.max = std::max(coloring.max, v);
    }
    bm.colorings[name] = std::move(coloring);
}

std::string ballmapper_to_json(const BallMapperGraph& bm, bool include_members) {
    std::string out;
    out += "{\"epsilon\":";
    out += format_double(bm.epsilon);
    out += ",\"metric\":\"" + bm.metric + "\"";
    out += ",\"landmarks\":[";
    for (std::size_t i = 0; i < bm.landmarks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(bm.landmarks[i]);
    }
    out += "],\"balls\":[";
    for (std::size_t i = 0; i < bm.members.size(); ++i) {
        if (i) out += ',';
        out += "{\"landmark\":" + std::to_string(bm.landmarks[i]);
        out += ",\"size\":" + std::to_string(bm.members[i].size());
        if (include_members) {
            out += ",\"members\":[";
            for (std::size_t k = 0; k < bm.members[i].size(); ++k) {
                if (k) out += ',';
                out += std::to_string(bm.members[i][k]);
            }
            out += ']';
        }
        out += '}';
    }
    out += "],\"edges\":[";
    for (std::size_t i = 0; i < bm.edges.size(); ++i) {
        if (i) out += ',';
        out += '[' + std::to_string(bm.edges[i].first) + ',' +
               std::to_string(bm.edges[i].second) + ']';
    }
    out += "],\"colorings\":{";
    bool first = true;
    for (const auto& [name, coloring] : bm.colorings) {
        if (!first) out += ',';
        first = false;
        out += '"' + name + "\":{\"values\":[";
        for (std::size_t i = 0; i < coloring.values.size(); ++i) {
            if (i) out += ',';
            out += format_double(coloring.values[i]);
        }
        out += "],\"min\":" + format_double(coloring.min);
        out += ",\"max\":" + format_double(coloring.max) + '}';
    }
    out += "}}";
    return out;
}

namespace {

struct Rgb {
    double r, g, b;
};

// fixed viridis-style ramp, interpolated linearly
std::string viridis(double t) {
    static const Rgb anchors[] = {
        {0x44 / 255.0, 0x01 / 255.0, 0x54 / 255.0}, {0x47 / 255.0, 0x2d / 255.0, 0x7b / 255.0},
        {0x3b / 255.0, 0x52 / 255.0, 0x8b / 255.0}, {0x2c / 255.0, 0x72 / 255.0, 0x8e / 255.0},
        {0x21 / 255.0, 0x91 / 255.0, 0x8c / 255.0}, {0x28 / 255.0, 0xae / 255.0, 0x80 / 255.0},
        {0x5e / 255.0, 0xc9 / 255.0, 0x62 / 255.0}, {0xad / 255.0, 0xdc / 255.0, 0x30 / 255.0},
        {0xfd / 255.0, 0xe7 / 255.0, 0x25 / 255.0}};
    t = std::clamp(t, 0.0, 1.0);
    double scaled = t * 8.0;
    int lo = std::min(7, static_cast<int>(scaled));
    double frac = scaled - lo;
    Rgb c{anchors[lo].r + frac * (anchors[lo + 1].r - anchors[lo].r),
          anchors[lo].g + frac * (anchors[lo + 1].g - anchors[lo].g),
          anchors[lo].b + frac * (anchors[lo + 1].b - anchors[lo].b)};
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(c.r * 255.0 + 0.5),
                  static_cast<int>(c.g * 255.0 + 0.5), static_cast<int>(c.b * 255.0 + 0.5));
    return buf;
}

}  // namespace

std::string ballmapper_to_dot(const BallMapperGraph& bm, const std::string& coloring) {
    const BallMapperGraph::Coloring* col = nullptr;
    auto it = bm.colorings.find(coloring);
    if (it != bm.colorings.end()) col = &it->second;

    std::size_t biggest = 1;
    for (const auto& ms : bm.members) biggest = std::max(biggest, ms.size());

    std::string out = "graph ballmapper {\n";
    out += "  node [shape=circle, style=filled, fixedsize=true];\n";
    for (std::size_t i = 0; i < bm.members.size(); ++i) {
        double width = 0.25 + 1.25 * std::sqrt(static_cast<double>(bm.members[i].size()) /
                                               static_cast<double>(biggest));
        std::string fill = "#cccccc";
        if (col != nullptr) {
            double range = col->max - col->min;
            double t = range > 0.0 ? (col->values[i] - col->min) / range : 0.5;
            fill = viridis(t);
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "  %zu [label=\"%zu\", width=%.3f, fillcolor=\"%s\"];\n", i, i, width,
                      fill.c_str());
        out += buf;
    }
    for (const auto& [a, b] : bm.edges)
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace chromatlas
