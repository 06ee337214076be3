#pragma once

#include "mlab/grid.hpp"

namespace mlab {

/// Finite-difference derivative of a sampled field.
///
/// Interior points use centered stencils: fourth order where two neighbors are
/// available on each side, second order next to the boundary. The endpoints use
/// one-sided second-order stencils, so consistency order is >= 2 everywhere.
/// order must be 1 or 2; the field needs at least 5 points.
Field derivative(const Field& f, int order);
ComplexField derivative(const ComplexField& f, int order);

/// d^2 ln f / dx^2 for strictly positive f, formed as f''/f - (f'/f)^2 so the
/// far tails (f near underflow) stay well conditioned. Throws domain_error on
/// nonpositive samples.
Field log_curvature(const Field& f);

/// Same stencils on a raw sample vector with explicit spacing.
std::vector<double> derivative_samples(const std::vector<double>& v, double spacing, int order);
std::vector<std::complex<double>> derivative_samples(const std::vector<std::complex<double>>& v,
                                                     double spacing, int order);

/// Row-wise / column-wise derivatives of a 2D array (axis 0 = rows = first index).
template <typename T>
Array2<T> derivative_axis0(const Array2<T>& a, double spacing, int order) {
    Array2<T> out(a.rows(), a.cols());
    std::vector<T> col(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, j);
        const auto d = derivative_samples(col, spacing, order);
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = d[i];
    }
    return out;
}

template <typename T>
Array2<T> derivative_axis1(const Array2<T>& a, double spacing, int order) {
    Array2<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto d = derivative_samples(a.row(i), spacing, order);
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = d[j];
    }
    return out;
}

}  // namespace mlab
