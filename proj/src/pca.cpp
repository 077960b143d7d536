#include "chromatlas/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chromatlas/jacobi.hpp"

namespace chromatlas {

PcaResult pca(const PointCloud& cloud) {
    const std::size_t rows = cloud.n_rows;
    const std::size_t p = cloud.n_cols;
    if (rows < 2) throw std::invalid_argument("PCA needs at least two rows");

    PcaResult result;
    result.mean.assign(p, 0.0);
    // two passes with fixed sequential order, for reproducibility
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < p; ++c) result.mean[c] += cloud.at(r, c);
    for (std::size_t c = 0; c < p; ++c) result.mean[c] /= static_cast<double>(rows);

    std::vector<double> cov(p * p, 0.0);
    std::vector<double> centered(p);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < p; ++c) centered[c] = cloud.at(r, c) - result.mean[c];
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i; j < p; ++j) cov[i * p + j] += centered[i] * centered[j];
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            cov[i * p + j] /= static_cast<double>(rows - 1);
            cov[j * p + i] = cov[i * p + j];
        }

    EigenDecomposition eig = jacobi_eigen(cov, static_cast<int>(p), 1e-12, 64);

    std::vector<std::size_t> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return eig.values[a] > eig.values[b];
    });

    result.eigenvalues.reserve(p);
    result.loadings.reserve(p);
    for (std::size_t rank = 0; rank < p; ++rank) {
        std::size_t source = idx[rank];
        std::vector<double> vec = eig.vectors[source];
        std::size_t largest = 0;
        for (std::size_t c = 1; c < p; ++c)
            if (std::fabs(vec[c]) > std::fabs(vec[largest])) largest = c;
        if (vec[largest] < 0.0)
            for (double& x : vec) x = -x;
        result.eigenvalues.push_back(eig.values[source]);
        result.loadings.push_back(std::move(vec));
    }

    double trace = 0.0;
    for (double v : result.eigenvalues) trace += v;
    result.nev.resize(p, 0.0);
    result.cev.resize(p, 0.0);
    double running = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        result.nev[j] = trace > 0.0 ? result.eigenvalues[j] / trace : 0.0;
        running += result.nev[j];
        result.cev[j] = running;
    }
    return result;
}

std::vector<double> project(const PointCloud& cloud, const PcaResult& result, int k) {
    const std::size_t p = cloud.n_cols;
    if (k < 0 || static_cast<std::size_t>(k) > p)
        throw std::invalid_argument("component count exceeds feature count");
    std::vector<double> scores(cloud.n_rows * static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < cloud.n_rows; ++r)
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < p; ++c)
                s += (cloud.at(r, c) - result.mean[c]) * result.loadings[static_cast<std::size_t>(j)][c];
            scores[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)] = s;
        }
    return scores;
}

}  // namespace chromatlas
