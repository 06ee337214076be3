#pragma once

#include <vector>

namespace mlab {

struct Eigenpair {
    double value;
    std::vector<double> vector;
};

/// Lowest k eigenpairs of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal. Eigenvalues come back ascending; each eigenvector
/// is normalized so that weight * sum(v_i^2) == 1 (weight = quadrature weight,
/// e.g. the grid spacing; 1 gives plain unit vectors). Throws numerical_error
/// if the backend fails to converge.
std::vector<Eigenpair> solve_tridiag_eigen(const std::vector<double>& diagonal,
                                           const std::vector<double>& off_diagonal,
                                           std::size_t k, double weight = 1.0);

}  // namespace mlab
