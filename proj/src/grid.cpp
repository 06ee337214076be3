#include "mlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace mlab {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw std::invalid_argument("grid bounds must be finite");
    if (n_points < 3)
        throw std::invalid_argument("grid needs at least 3 points");
    if (!(x_max > x_min))
        throw std::invalid_argument("grid interval is empty or degenerate");
    spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid1D::points() const {
    std::vector<double> xs(n_);
    for (std::size_t i = 0; i < n_; ++i) xs[i] = (*this)[i];
    return xs;
}

bool Grid1D::symmetric_about_zero(double tol) const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (std::abs((*this)[i] + (*this)[n_ - 1 - i]) > tol) return false;
    }
    return true;
}

std::size_t Grid1D::nearest_index(double x) const {
    const double t = (x - x_min_) / spacing_;
    const auto i = static_cast<long>(std::lround(t));
    return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n_) - 1));
}

}  // namespace mlab
