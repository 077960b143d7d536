#include "chromatlas/jacobi.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace chromatlas {

EigenDecomposition jacobi_eigen(const std::vector<double>& matrix, int n,
                                double tol, int max_sweeps) {
    if (n < 1 || static_cast<std::size_t>(n) * n != matrix.size())
        throw std::invalid_argument("matrix must be n x n");
    std::vector<double> a = matrix;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto at = [&](std::vector<double>& mm, int r, int c) -> double& {
        return mm[static_cast<std::size_t>(r) * n + c];
    };

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(a, p, q)));
        if (off <= tol) {
            EigenDecomposition out;
            out.values.resize(static_cast<std::size_t>(n));
            out.vectors.assign(static_cast<std::size_t>(n),
                               std::vector<double>(static_cast<std::size_t>(n)));
            for (int i = 0; i < n; ++i) {
                out.values[static_cast<std::size_t>(i)] = at(a, i, i);
                for (int r = 0; r < n; ++r)
                    out.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
                        at(v, r, i);
            }
            return out;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                if (std::fabs(apq) <= tol * 1e-3) continue;
                double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = at(a, p, p), aqq = at(a, q, q);
                at(a, p, p) = app - t * apq;
                at(a, q, q) = aqq + t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = at(a, r, p), arq = at(a, r, q);
                        at(a, r, p) = arp - s * (arq + tau * arp);
                        at(a, p, r) = at(a, r, p);
                        at(a, r, q) = arq + s * (arp - tau * arq);
                        at(a, q, r) = at(a, r, q);
                    }
                    double vrp = at(v, r, p), vrq = at(v, r, q);
                    at(v, r, p) = vrp - s * (vrq + tau * vrp);
                    at(v, r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
    }
    throw std::runtime_error("Jacobi eigensolver did not converge");
}

}  // namespace chromatlas
