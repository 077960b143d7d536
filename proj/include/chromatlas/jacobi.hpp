#ifndef CHROMATLAS_JACOBI_HPP
#define CHROMATLAS_JACOBI_HPP

#include <vector>

namespace chromatlas {

struct EigenDecomposition {
    std::vector<double> values;                // unsorted
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};

/// Cyclic Jacobi sweeps over a dense symmetric matrix (row-major n x n).
/// Rotations are applied in a fixed order, so results are bit-stable across
/// runs. Throws std::runtime_error if the off-diagonal mass has not dropped
/// below tol after max_sweeps sweeps.
EigenDecomposition jacobi_eigen(const std::vector<double>& matrix, int n,
                                double tol = 1e-12, int max_sweeps = 64);

}  // namespace chromatlas

#endif
