#ifndef CHROMATLAS_POINTCLOUD_HPP
#define CHROMATLAS_POINTCLOUD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chromatlas/records.hpp"

namespace chromatlas {

struct FeatureTransform {
    bool constant = false;  // max == min after the log map; feature pinned to 0
    double log_min = 0.0;
    double log_max = 0.0;
};

/// Row-major feature matrix with graph6 row ids.
struct PointCloud {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> data;
    std::vector<std::string> row_ids;
    std::vector<std::string> feature_labels;
    std::vector<FeatureTransform> transforms;  // filled by log_minmax_normalize
    bool normalized = false;

    double at(std::size_t r, std::size_t c) const { return data[r * n_cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * n_cols + c]; }
};

enum class CloudMode {
    FixedOrder,  // all records share one order; keep |c_{n-1}| .. |c_1|
    MixedOrder,  // keep every padded slot
};

/// padded_len is the coefficient-vector length used in MixedOrder mode and
/// must be at least the longest record.
PointCloud build_point_cloud(const std::vector<GraphRecord>& records, CloudMode mode,
                             int padded_len);

/// x -> ln(1 + x), then per-feature min-max scaling to [0, 1]; constant
/// features map to exactly 0.
PointCloud log_minmax_normalize(const PointCloud& cloud);

}  // namespace chromatlas

#endif
