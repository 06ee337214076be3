#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mlab {

/// Uniform 1D sample axis. Endpoints are included exactly; interior points are
/// x_min + i*spacing with spacing = (x_max - x_min)/(n - 1).
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_; }
    double spacing() const { return spacing_; }

    double operator[](std::size_t i) const {
        return i + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(i) * spacing_;
    }

    std::vector<double> points() const;

    /// True when both axes describe the same samples (exact bounds, same count).
    bool same_as(const Grid1D& other) const {
        return n_ == other.n_ && x_min_ == other.x_min_ && x_max_ == other.x_max_;
    }

    /// Symmetric about zero: x[i] == -x[n-1-i] within tol, zero included for odd n.
    bool symmetric_about_zero(double tol = 1e-12) const;

    /// Index of the sample closest to x (clamped to range).
    std::size_t nearest_index(double x) const;

private:
    double x_min_, x_max_, spacing_;
    std::size_t n_;
};

inline Grid1D make_uniform_grid(double x_min, double x_max, std::size_t n) {
    return Grid1D(x_min, x_max, n);
}

/// Sampled function on a Grid1D.
template <typename T>
struct BasicField {
    Grid1D grid;
    std::vector<T> values;

    BasicField(const Grid1D& g, std::vector<T> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("field length does not match grid");
    }

    BasicField(const Grid1D& g, T fill) : grid(g), values(g.size(), fill) {}

    template <typename F>
    static BasicField sample(const Grid1D& g, F&& f) {
        std::vector<T> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g[i]);
        return BasicField(g, std::move(v));
    }

    std::size_t size() const { return values.size(); }
    T operator[](std::size_t i) const { return values[i]; }
    T& operator[](std::size_t i) { return values[i]; }

    bool all_finite() const {
        for (const T& v : values)
            if (!finite_value(v)) return false;
        return true;
    }

private:
    static bool finite_value(double v) { return std::isfinite(v); }
    static bool finite_value(const std::complex<double>& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    }
};

using Field = BasicField<double>;
using ComplexField = BasicField<std::complex<double>>;

/// Dense row-major 2D array; rows index the first axis.
template <typename T>
class Array2 {
public:
    Array2() : rows_(0), cols_(0) {}
    Array2(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

}  // namespace mlab
