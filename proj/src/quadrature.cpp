#include "mlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace mlab {

namespace {

template <typename T>
T simpson_sum(std::span<const T> v, double h) {
    const std::size_t n = v.size();
    if (n < 2) throw std::invalid_argument("quadrature needs at least 2 samples");
    // Simpson needs an even panel count; peel one trapezoid panel off the end otherwise.
    const std::size_t m = (n % 2 == 1) ? n : n - 1;
    T acc{};
    if (m >= 3) {
        acc = v[0] + v[m - 1];
        for (std::size_t i = 1; i + 1 < m; i += 2) acc += 4.0 * v[i];
        for (std::size_t i = 2; i + 1 < m; i += 2) acc += 2.0 * v[i];
        acc *= h / 3.0;
    }
    if (m != n) acc += 0.5 * h * (v[n - 2] + v[n - 1]);
    return acc;
}

template <typename T>
void require_finite(std::span<const T> v) {
    for (const T& x : v) {
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(x)) throw std::invalid_argument("non-finite integrand sample");
        } else {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
                throw std::invalid_argument("non-finite integrand sample");
        }
    }
}

}  // namespace

double integrate(std::span<const double> values, double spacing) {
    require_finite(values);
    return simpson_sum(values, spacing);
}

std::complex<double> integrate(std::span<const std::complex<double>> values, double spacing) {
    require_finite(values);
    return simpson_sum(values, spacing);
}

double integrate(const Field& f) {
    return integrate(std::span<const double>(f.values), f.grid.spacing());
}

std::complex<double> integrate(const ComplexField& f) {
    return integrate(std::span<const std::complex<double>>(f.values), f.grid.spacing());
}

double simpson_weight(std::size_t i, std::size_t n) {
    const std::size_t m = (n % 2 == 1) ? n : n - 1;
    double w = 0.0;
    if (m >= 3 && i < m) {
        if (i == 0 || i == m - 1)
            w = 1.0 / 3.0;
        else
            w = (i % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    }
    if (m != n && i >= n - 2) w += 0.5;
    return w;
}

}  // namespace mlab
