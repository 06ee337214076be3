#include "mlab/wigner_moyal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/derivative.hpp"
#include "mlab/errors.hpp"
#include "mlab/quadrature.hpp"

namespace mlab {

namespace {

using cplx = std::complex<double>;

bool cubic_in_range(const Grid1D& g, double x) {
    const double t = (x - g.x_min()) / g.spacing();
    const auto i = static_cast<long>(std::floor(t));
    return i >= 1 && i + 2 <= static_cast<long>(g.size()) - 1;
}

// 4-point Lagrange interpolation on a uniform axis; caller guarantees range.
template <typename T>
T cubic_interp(const std::vector<T>& f, const Grid1D& g, double x) {
    const double t = (x - g.x_min()) / g.spacing();
    auto i = static_cast<long>(std::floor(t));
    i = std::clamp<long>(i, 1, static_cast<long>(g.size()) - 3);
    const double s = t - static_cast<double>(i);
    const double wm1 = -s * (s - 1.0) * (s - 2.0) / 6.0;
    const double w0 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    const double w1 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    const double w2 = (s + 1.0) * s * (s - 1.0) / 6.0;
    return wm1 * f[i - 1] + w0 * f[i] + w1 * f[i + 1] + w2 * f[i + 2];
}

void require_displacement_axis(const Grid1D& dx_grid) {
    if (dx_grid.size() % 2 == 0 || !dx_grid.symmetric_about_zero(1e-12 * dx_grid.spacing() +
                                                                 1e-15))
        throw std::invalid_argument(
            "displacement axis must be symmetric about zero with an odd point count");
}

// Estimates of a dx->0 limit from shells h, 2h, 3h combine with weights that
// cancel the h^2 and h^4 terms of the centered-difference error expansion.
template <typename T>
T extrapolate_shells(const std::vector<T>& est) {
    if (est.size() >= 3) return 1.5 * est[0] - 0.6 * est[1] + 0.1 * est[2];
    if (est.size() == 2) return (4.0 * est[0] - est[1]) / 3.0;
    return est.at(0);
}

std::size_t shell_count(const CharacteristicFunction& Z) {
    if (Z.dx_grid.size() < 5)
        throw std::invalid_argument("displacement axis too short to resolve the dx -> 0 limit");
    return std::min<std::size_t>(3, Z.center());
}

cplx first_limit(const CharacteristicFunction& Z, std::size_t i, std::size_t shells) {
    const std::size_t c = Z.center();
    const double h = Z.dx_grid.spacing();
    std::vector<cplx> est(shells);
    for (std::size_t s = 1; s <= shells; ++s)
        est[s - 1] = (Z.values(i, c + s) - Z.values(i, c - s)) /
                     (2.0 * static_cast<double>(s) * h);
    return extrapolate_shells(est);
}

cplx second_limit(const CharacteristicFunction& Z, std::size_t i, std::size_t shells) {
    const std::size_t c = Z.center();
    const double h = Z.dx_grid.spacing();
    std::vector<cplx> est(shells);
    for (std::size_t s = 1; s <= shells; ++s) {
        const double sh = static_cast<double>(s) * h;
        est[s - 1] =
            (Z.values(i, c + s) - 2.0 * Z.values(i, c) + Z.values(i, c - s)) / (sh * sh);
    }
    return extrapolate_shells(est);
}

// Same limits on ln Z; requires Z in the right half-plane on the stencil.
cplx log_first_limit(const CharacteristicFunction& Z, std::size_t i, std::size_t shells) {
    const std::size_t c = Z.center();
    const double h = Z.dx_grid.spacing();
    std::vector<cplx> est(shells);
    for (std::size_t s = 1; s <= shells; ++s) {
        if (Z.values(i, c + s).real() <= 0.0 || Z.values(i, c - s).real() <= 0.0)
            throw std::domain_error("Z leaves the right half-plane inside the limit stencil");
        est[s - 1] = (std::log(Z.values(i, c + s)) - std::log(Z.values(i, c - s))) /
                     (2.0 * static_cast<double>(s) * h);
    }
    return extrapolate_shells(est);
}

cplx log_second_limit(const CharacteristicFunction& Z, std::size_t i, std::size_t shells) {
    const std::size_t c = Z.center();
    const double h = Z.dx_grid.spacing();
    const cplx l0 = std::log(Z.values(i, c));
    std::vector<cplx> est(shells);
    for (std::size_t s = 1; s <= shells; ++s) {
        if (Z.values(i, c + s).real() <= 0.0 || Z.values(i, c - s).real() <= 0.0)
            throw std::domain_error("Z leaves the right half-plane inside the limit stencil");
        const double sh = static_cast<double>(s) * h;
        est[s - 1] = (std::log(Z.values(i, c + s)) - 2.0 * l0 + std::log(Z.values(i, c - s))) /
                     (sh * sh);
    }
    return extrapolate_shells(est);
}

}  // namespace

CharacteristicFunction::CharacteristicFunction(Grid1D xg, Grid1D dxg,
                                               Array2<std::complex<double>> z, double hb)
    : x_grid(xg), dx_grid(dxg), values(std::move(z)), hbar(hb) {
    require_displacement_axis(dx_grid);
    if (values.rows() != x_grid.size() || values.cols() != dx_grid.size())
        throw std::invalid_argument("characteristic function shape does not match grids");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");

    double max_abs = 0.0;
    for (const cplx& v : values.data()) max_abs = std::max(max_abs, std::abs(v));
    const double tol = 1e-10 * std::max(max_abs, 1e-300);
    const std::size_t c = center();
    for (std::size_t i = 0; i < values.rows(); ++i) {
        if (std::abs(values(i, c).imag()) > tol || values(i, c).real() < -tol)
            throw std::domain_error("Z(x, 0) must be real and nonnegative");
        for (std::size_t s = 1; s <= c; ++s) {
            if (std::abs(values(i, c + s) - std::conj(values(i, c - s))) > tol)
                throw std::domain_error("Z must be conjugate-symmetric in the displacement");
        }
    }
}

Field CharacteristicFunction::density() const {
    Field rho(x_grid, 0.0);
    for (std::size_t i = 0; i < x_grid.size(); ++i) rho[i] = values(i, center()).real();
    return rho;
}

CharacteristicFunction characteristic_function(const PhaseSpaceDistribution& F,
                                               const Grid1D& dx_grid, double hbar,
                                               double max_extent) {
    require_displacement_axis(dx_grid);
    const double extent = std::max(std::abs(dx_grid.x_min()), std::abs(dx_grid.x_max()));
    if (extent > max_extent)
        throw std::invalid_argument("displacement axis exceeds the infinitesimal regime");

    const std::size_t nx = F.x_grid.size(), np = F.p_grid.size(), nd = dx_grid.size();
    Array2<cplx> z(nx, nd);
    std::vector<cplx> integrand(np);
    for (std::size_t j = 0; j < nd; ++j) {
        const double dx = dx_grid[j];
        std::vector<cplx> kernel(np);
        for (std::size_t k = 0; k < np; ++k)
            kernel[k] = std::polar(1.0, F.p_grid[k] * dx / hbar);
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t k = 0; k < np; ++k) integrand[k] = kernel[k] * F.values(i, k);
            z(i, j) = integrate(std::span<const cplx>(integrand), F.p_grid.spacing());
        }
    }
    return CharacteristicFunction(F.x_grid, dx_grid, std::move(z), hbar);
}

CharacteristicFunction ansatz_characteristic(const ComplexField& psi, const Grid1D& dx_grid,
                                             double hbar) {
    require_displacement_axis(dx_grid);
    const Grid1D& xg = psi.grid;
    const double half_extent =
        std::max(std::abs(dx_grid.x_min()), std::abs(dx_grid.x_max())) / 2.0;
    if (half_extent > (xg.x_max() - xg.x_min()) / 4.0)
        throw std::invalid_argument("displacement extent exceeds the interpolation margin");

    Array2<cplx> z(xg.size(), dx_grid.size());
    for (std::size_t i = 0; i < xg.size(); ++i) {
        for (std::size_t j = 0; j < dx_grid.size(); ++j) {
            const double xm = xg[i] - dx_grid[j] / 2.0;
            const double xp = xg[i] + dx_grid[j] / 2.0;
            if (!cubic_in_range(xg, xm) || !cubic_in_range(xg, xp)) continue;
            z(i, j) = std::conj(cubic_interp(psi.values, xg, xm)) *
                      cubic_interp(psi.values, xg, xp);
        }
    }
    return CharacteristicFunction(xg, dx_grid, std::move(z), hbar);
}

CharacteristicFunction equilibrium_characteristic(const Field& rho, const Grid1D& dx_grid,
                                                  double hbar) {
    require_displacement_axis(dx_grid);
    const Grid1D& xg = rho.grid;
    const double half_extent =
        std::max(std::abs(dx_grid.x_min()), std::abs(dx_grid.x_max())) / 2.0;
    if (half_extent > (xg.x_max() - xg.x_min()) / 4.0)
        throw std::invalid_argument("displacement extent exceeds the interpolation margin");

    std::vector<double> log_rho(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0))
            throw std::domain_error("equilibrium density must be strictly positive");
        log_rho[i] = std::log(rho[i]);
    }

    Array2<cplx> z(xg.size(), dx_grid.size());
    for (std::size_t i = 0; i < xg.size(); ++i) {
        for (std::size_t j = 0; j < dx_grid.size(); ++j) {
            const double xm = xg[i] - dx_grid[j] / 2.0;
            const double xp = xg[i] + dx_grid[j] / 2.0;
            if (!cubic_in_range(xg, xm) || !cubic_in_range(xg, xp)) continue;
            z(i, j) = std::exp(0.5 * (cubic_interp(log_rho, xg, xm) +
                                      cubic_interp(log_rho, xg, xp)));
        }
    }
    return CharacteristicFunction(xg, dx_grid, std::move(z), hbar);
}

DensityFields zq_limit_moments(const CharacteristicFunction& Z) {
    const std::size_t shells = shell_count(Z);
    const double hbar = Z.hbar;
    Field rho = Z.density();
    Field momentum(Z.x_grid, 0.0), m2(Z.x_grid, 0.0), dispersion(Z.x_grid, 0.0);
    for (std::size_t i = 0; i < Z.x_grid.size(); ++i) {
        m2[i] = -hbar * hbar * second_limit(Z, i, shells).real();
        if (rho[i] > kRhoFloor) {
            const double p_rho = hbar * first_limit(Z, i, shells).imag();
            momentum[i] = p_rho / rho[i];
            dispersion[i] = m2[i] / rho[i] - momentum[i] * momentum[i];
        }
    }
    return DensityFields{rho, momentum, m2, dispersion};
}

Field dispersion_from_zq(const CharacteristicFunction& Z) {
    const std::size_t shells = shell_count(Z);
    Field out(Z.x_grid, 0.0);
    for (std::size_t i = 0; i < Z.x_grid.size(); ++i) {
        if (Z.values(i, Z.center()).real() <= kRhoFloor) continue;
        out[i] = -Z.hbar * Z.hbar * log_second_limit(Z, i, shells).real();
    }
    return out;
}

Field closed_form_dispersion(const Field& rho, double hbar) {
    const Field curv = log_curvature(rho);
    Field out(rho.grid, 0.0);
    for (std::size_t i = 0; i < rho.size(); ++i) out[i] = -hbar * hbar / 4.0 * curv[i];
    return out;
}

Array2<double> factorization_residual(const CharacteristicFunction& Z, const ComplexField& psi) {
    if (!psi.grid.same_as(Z.x_grid))
        throw std::invalid_argument("amplitude must live on the characteristic function's grid");
    const Grid1D& xg = Z.x_grid;
    const double half_extent =
        std::max(std::abs(Z.dx_grid.x_min()), std::abs(Z.dx_grid.x_max())) / 2.0;
    if (half_extent > (xg.x_max() - xg.x_min()) / 4.0)
        throw std::invalid_argument("displacement extent exceeds the interpolation margin");

    Array2<double> res(xg.size(), Z.dx_grid.size());
    for (std::size_t i = 0; i < xg.size(); ++i) {
        for (std::size_t j = 0; j < Z.dx_grid.size(); ++j) {
            const double xm = xg[i] - Z.dx_grid[j] / 2.0;
            const double xp = xg[i] + Z.dx_grid[j] / 2.0;
            if (!cubic_in_range(xg, xm) || !cubic_in_range(xg, xp)) continue;
            const cplx product = std::conj(cubic_interp(psi.values, xg, xm)) *
                                 cubic_interp(psi.values, xg, xp);
            res(i, j) = std::abs(Z.values(i, j) - product);
        }
    }
    return res;
}

MomentumStats momentum_partition_stats(const CharacteristicFunction& Z) {
    const std::size_t shells = shell_count(Z);
    const double hbar = Z.hbar;
    MomentumStats stats{Field(Z.x_grid, 0.0), Field(Z.x_grid, 0.0), Field(Z.x_grid, 0.0)};
    for (std::size_t i = 0; i < Z.x_grid.size(); ++i) {
        const cplx z0 = Z.values(i, Z.center());
        if (z0.real() <= kRhoFloor) continue;
        // mean p: -i hbar d(ln Z)/d(dx); mean p^2: -(hbar^2/Z) d^2 Z/d(dx)^2;
        // dispersion: -hbar^2 d^2 (ln Z)/d(dx)^2.
        stats.mean_p[i] = (-cplx(0.0, 1.0) * hbar * log_first_limit(Z, i, shells)).real();
        stats.mean_p2[i] = (-hbar * hbar * second_limit(Z, i, shells) / z0).real();
        stats.dispersion[i] = -hbar * hbar * log_second_limit(Z, i, shells).real();
    }
    return stats;
}

}  // namespace mlab
