#ifndef CHROMATLAS_BALLMAPPER_HPP
#define CHROMATLAS_BALLMAPPER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chromatlas/pointcloud.hpp"

namespace chromatlas {

/// Nerve of the cover by closed epsilon-balls around the greedy net:
/// vertices are balls, edges mark shared points.
struct BallMapperGraph {
    double epsilon = 0.0;
    std::string metric = "euclidean";
    std::vector<std::size_t> landmarks;               // point indices, net order
    std::vector<std::vector<std::size_t>> members;    // per landmark, ascending
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // landmark positions, i < j

    struct Coloring {
        std::vector<double> values;  // one mean per landmark
        double min = 0.0;            // range of the function over the whole cloud
        double max = 0.0;
    };
    std::map<std::string, Coloring> colorings;
};

/// Greedy sweep in row order: a point becomes a landmark iff no earlier
/// landmark lies within epsilon of it (Euclidean).
std::vector<std::size_t> epsilon_net(const PointCloud& cloud, double epsilon);

/// membership(i) = points within epsilon of landmark i; the union covers the
/// cloud, overlaps allowed.
std::vector<std::vector<std::size_t>> build_cover(const PointCloud& cloud,
                                                  const std::vector<std::size_t>& landmarks,
                                                  double epsilon);

BallMapperGraph nerve(const PointCloud& cloud, double epsilon);
BallMapperGraph nerve_from_cover(double epsilon, std::vector<std::size_t> landmarks,
                                 std::vector<std::vector<std::size_t>> members);

/// Attach a named coloring: per-ball mean of a per-point function, recording
/// the function's min/max over the cloud for the legend scale.
void color_by(BallMapperGraph& bm, const std::vector<double>& values,
              const std::string& name);

std::string ballmapper_to_json(const BallMapperGraph& bm, bool include_members);

/// DOT with vertex size proportional to membership count and fill color from
/// a viridis ramp over the chosen coloring.
std::string ballmapper_to_dot(const BallMapperGraph& bm, const std::string& coloring);

}  // namespace chromatlas

#endif
