#include "mlab/derivative.hpp"

#include <stdexcept>

namespace mlab {

namespace {

template <typename T>
std::vector<T> stencil_derivative(const std::vector<T>& f, double h, int order) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("derivative needs at least 5 points");
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");

    std::vector<T> d(n);
    if (order == 1) {
        d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
        d[1] = (f[2] - f[0]) / (2.0 * h);
        for (std::size_t i = 2; i + 2 < n; ++i)
            d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
        d[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
        d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    } else {
        const double h2 = h * h;
        d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
        d[1] = (f[2] - 2.0 * f[1] + f[0]) / h2;
        for (std::size_t i = 2; i + 2 < n; ++i)
            d[i] = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) /
                   (12.0 * h2);
        d[n - 2] = (f[n - 1] - 2.0 * f[n - 2] + f[n - 3]) / h2;
        d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    }
    return d;
}

}  // namespace

Field derivative(const Field& f, int order) {
    return Field(f.grid, stencil_derivative(f.values, f.grid.spacing(), order));
}

Field log_curvature(const Field& f) {
    for (double v : f.values)
        if (!(v > 0.0)) throw std::domain_error("log_curvature requires positive samples");
    const Field d1 = derivative(f, 1);
    const Field d2 = derivative(f, 2);
    Field out(f.grid, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r1 = d1[i] / f[i];
        out[i] = d2[i] / f[i] - r1 * r1;
    }
    return out;
}

ComplexField derivative(const ComplexField& f, int order) {
    return ComplexField(f.grid, stencil_derivative(f.values, f.grid.spacing(), order));
}

std::vector<double> derivative_samples(const std::vector<double>& v, double spacing, int order) {
    return stencil_derivative(v, spacing, order);
}

std::vector<std::complex<double>> derivative_samples(const std::vector<std::complex<double>>& v,
                                                     double spacing, int order) {
    return stencil_derivative(v, spacing, order);
}

}  // namespace mlab
