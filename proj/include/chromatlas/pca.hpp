#ifndef CHROMATLAS_PCA_HPP
#define CHROMATLAS_PCA_HPP

#include <vector>

#include "chromatlas/pointcloud.hpp"

namespace chromatlas {

struct PcaResult {
    std::vector<double> eigenvalues;            // sorted non-increasing
    std::vector<std::vector<double>> loadings;  // loadings[j] pairs with eigenvalues[j]
    std::vector<double> nev;                    // normalized explained variance
    std::vector<double> cev;                    // cumulative
    std::vector<double> mean;                   // centering vector
};

/// Sample covariance (divisor n-1) of the mean-centered rows,
/// eigendecomposed with cyclic Jacobi. Loadings are flipped so the entry of
/// largest magnitude is positive; the overall sign is otherwise arbitrary.
PcaResult pca(const PointCloud& cloud);

/// PC scores: centered rows times the first k loading vectors, row-major
/// n_rows x k.
std::vector<double> project(const PointCloud& cloud, const PcaResult& result, int k);

}  // namespace chromatlas

#endif
