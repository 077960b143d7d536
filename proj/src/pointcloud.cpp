#include "chromatlas/pointcloud.hpp"

#include <cmath>
#include <stdexcept>

namespace chromatlas {

PointCloud build_point_cloud(const std::vector<GraphRecord>& records, CloudMode mode,
                             int padded_len) {
    if (records.empty()) throw std::invalid_argument("empty record set");
    PointCloud cloud;
    cloud.n_rows = records.size();
    if (mode == CloudMode::FixedOrder) {
        const int n = records.front().n;
        for (const GraphRecord& r : records)
            if (r.n != n)
                throw std::invalid_argument("fixed-order cloud given mixed orders");
        // drop the constant leading 1 and the zero padding
        cloud.n_cols = static_cast<std::size_t>(n - 1);
        for (int i = 1; i < n; ++i)
            cloud.feature_labels.push_back("c" + std::to_string(n - i));
        cloud.data.resize(cloud.n_rows * cloud.n_cols);
        std::size_t row = 0;
        for (const GraphRecord& r : records) {
            cloud.row_ids.push_back(r.graph6);
            for (std::size_t c = 0; c < cloud.n_cols; ++c)
                cloud.at(row, c) = static_cast<double>(r.q.entries[c + 1]);
            ++row;
        }
    } else {
        cloud.n_cols = static_cast<std::size_t>(padded_len);
        for (int i = 0; i < padded_len; ++i)
            cloud.feature_labels.push_back("q" + std::to_string(i));
        cloud.data.resize(cloud.n_rows * cloud.n_cols);
        std::size_t row = 0;
        for (const GraphRecord& r : records) {
            if (static_cast<int>(r.q.entries.size()) > padded_len)
                throw std::invalid_argument("padded length smaller than a record vector");
            cloud.row_ids.push_back(r.graph6);
            for (std::size_t c = 0; c < cloud.n_cols; ++c)
                cloud.at(row, c) = c < r.q.entries.size()
                                       ? static_cast<double>(r.q.entries[c])
                                       : 0.0;
            ++row;
        }
    }
    return cloud;
}

PointCloud log_minmax_normalize(const PointCloud& cloud) {
    PointCloud out = cloud;
    out.transforms.assign(cloud.n_cols, FeatureTransform{});
    for (std::size_t c = 0; c < cloud.n_cols; ++c) {
        double lo = 0.0, hi = 0.0;
        for (std::size_t r = 0; r < cloud.n_rows; ++r) {
            double x = cloud.at(r, c);
            if (x < 0.0) throw std::invalid_argument("negative feature value");
            double v = std::log1p(x);
            if (r == 0) {
                lo = hi = v;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        FeatureTransform& t = out.transforms[c];
        t.log_min = lo;
        t.log_max = hi;
        t.constant = (hi == lo);
        for (std::size_t r = 0; r < cloud.n_rows; ++r) {
            double v = std::log1p(cloud.at(r, c));
            out.at(r, c) = t.constant ? 0.0 : (v - lo) / (hi - lo);
        }
    }
    out.normalized = true;
    return out;
}

}  // namespace chromatlas
