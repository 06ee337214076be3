#include "mlab/eigensolver.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

#include "mlab/errors.hpp"

namespace mlab {

std::vector<Eigenpair> solve_tridiag_eigen(const std::vector<double>& diagonal,
                                           const std::vector<double>& off_diagonal,
                                           std::size_t k, double weight) {
    const std::size_t n = diagonal.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (off_diagonal.size() + 1 != n)
        throw std::invalid_argument("off-diagonal length must be diagonal length - 1");
    if (k == 0 || k > n) throw std::invalid_argument("requested eigenpair count out of range");
    if (!(weight > 0.0)) throw std::invalid_argument("quadrature weight must be positive");

    // dstevr destroys its inputs.
    std::vector<double> d(diagonal), e(off_diagonal);
    e.resize(n, 0.0);

    std::vector<double> w(n), z(n * k);
    std::vector<lapack_int> isuppz(2 * std::max<std::size_t>(1, k));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', static_cast<lapack_int>(n), d.data(), e.data(), 0.0, 0.0, 1,
        static_cast<lapack_int>(k), 0.0, &m, w.data(), z.data(), static_cast<lapack_int>(n),
        isuppz.data());
    if (info != 0 || static_cast<std::size_t>(m) != k)
        throw numerical_error("tridiagonal eigensolver failed (info=" + std::to_string(info) + ")");

    std::vector<Eigenpair> pairs(k);
    for (std::size_t j = 0; j < k; ++j) {
        pairs[j].value = w[j];
        pairs[j].vector.assign(z.begin() + j * n, z.begin() + (j + 1) * n);
        double s = 0.0;
        for (double v : pairs[j].vector) s += v * v;
        const double scale = 1.0 / std::sqrt(s * weight);
        for (double& v : pairs[j].vector) v *= scale;
    }
    return pairs;
}

}  // namespace mlab
