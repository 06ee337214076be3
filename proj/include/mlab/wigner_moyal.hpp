#pragma once

#include "mlab/grid.hpp"
#include "mlab/phase_space.hpp"

namespace mlab {

/// Infinitesimal Wigner-Moyal characteristic function
///   Z(x, dx) = integral of exp(i p dx / hbar) F(x, p) dp
/// sampled on an x grid and a small displacement axis centered on zero.
/// Z(x, 0) equals the marginal density, and Z is conjugate-symmetric in dx for
/// real F; both are validated on construction.
struct CharacteristicFunction {
    Grid1D x_grid;
    Grid1D dx_grid;
    Array2<std::complex<double>> values;  // values(i, j) = Z(x_i, dx_j)
    double hbar = 1.0;

    CharacteristicFunction(Grid1D xg, Grid1D dxg, Array2<std::complex<double>> z, double hbar);

    std::size_t center() const { return (dx_grid.size() - 1) / 2; }

    /// Marginal density Z(x, 0).
    Field density() const;
};

/// Momentum statistics generated by log-derivatives of Z at dx = 0, one row of
/// the partition-function analogy per field.
struct MomentumStats {
    Field mean_p;
    Field mean_p2;
    Field dispersion;
};

/// Transform a phase-space distribution. The displacement axis must be
/// symmetric about zero with an odd point count; its half-extent must stay in
/// the infinitesimal regime (default cap 0.1 natural length units).
CharacteristicFunction characteristic_function(const PhaseSpaceDistribution& F,
                                               const Grid1D& dx_grid, double hbar = 1.0,
                                               double max_extent = 0.1);

/// Characteristic function of the product form
///   conj(psi(x - dx/2)) * psi(x + dx/2),
/// with off-grid amplitudes from cubic interpolation. Entries whose stencil
/// would leave the grid are zero; the half-extent may not exceed a quarter of
/// the x window.
CharacteristicFunction ansatz_characteristic(const ComplexField& psi, const Grid1D& dx_grid,
                                             double hbar = 1.0);

/// Equilibrium construction: the density evaluated at the two displaced points,
/// combined as sqrt(rho(x - dx/2) * rho(x + dx/2)) (the product form for a real
/// nonnegative amplitude). Interpolation happens on ln rho, so rho must be
/// strictly positive.
CharacteristicFunction equilibrium_characteristic(const Field& rho, const Grid1D& dx_grid,
                                                  double hbar = 1.0);

/// Moments recovered from the dx -> 0 limits: density from Z(x,0), momentum
/// density from the first dx-derivative, raw second moment from the second.
/// Limits use Richardson-extrapolated centered differences over the smallest
/// displacement shells; needs at least 5 dx points.
DensityFields zq_limit_moments(const CharacteristicFunction& Z);

/// Conditional momentum variance as the dx -> 0 limit of
///   -hbar^2 d^2 ln Z / d(dx)^2.
/// Zero where the marginal density is below the floor; throws domain_error if
/// Z leaves the right half-plane at a required stencil point.
Field dispersion_from_zq(const CharacteristicFunction& Z);

/// Closed-form equilibrium dispersion -(hbar^2/4) d^2 ln rho / dx^2.
Field closed_form_dispersion(const Field& rho, double hbar = 1.0);

/// Pointwise magnitude of Z(x, dx) - conj(psi(x - dx/2)) psi(x + dx/2).
/// Scales as O(dx^3) exactly when the product form reproduces Z through second
/// order. Entries out of interpolation range are zero.
Array2<double> factorization_residual(const CharacteristicFunction& Z, const ComplexField& psi);

/// Mean momentum, raw second moment, and dispersion per x from log-derivatives
/// of Z at dx = 0 (the momentum partition-function rows).
MomentumStats momentum_partition_stats(const CharacteristicFunction& Z);

}  // namespace mlab
