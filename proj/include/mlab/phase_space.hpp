#pragma once

#include <functional>

#include "mlab/grid.hpp"
#include "mlab/segments.hpp"

namespace mlab {

// Density floor below which conditional momentum statistics are defined as zero,
// and the boundary margin (points per side) excluded from residual reports.
inline constexpr double kRhoFloor = 1e-12;
inline constexpr std::size_t kResidualMargin = 2;

/// One-particle phase-space density F(x, p) at a fixed time, with the mass and
/// external potential that drive its transport.
struct PhaseSpaceDistribution {
    Grid1D x_grid;
    Grid1D p_grid;
    Array2<double> values;  // values(i, j) = F(x_i, p_j)
    double time = 0.0;
    double mass = 1.0;
    Field potential;

    PhaseSpaceDistribution(Grid1D xg, Grid1D pg, Array2<double> f, double t, double m, Field v);

    /// Sample f(x, p), rescale to unit total probability, then validate.
    static PhaseSpaceDistribution sample_normalized(
        const Grid1D& xg, const Grid1D& pg, const std::function<double(double, double)>& f,
        double time, double mass, const std::function<double(double)>& potential);

    double total_probability() const;
};

/// Momentum moments of F conditioned on position.
struct DensityFields {
    Field rho;         // marginal probability density
    Field momentum;    // conditional mean momentum p(x)
    Field m2;          // raw second moment, integral of p^2 F dp
    Field dispersion;  // conditional momentum variance

    /// Build from conditional statistics: m2 = rho * (dispersion + momentum^2).
    static DensityFields from_conditional(const Field& rho, const Field& momentum,
                                          const Field& dispersion);

    void validate() const;
};

/// Field plus the node-free index ranges on which its values are meaningful.
struct SegmentedField {
    Field values;
    std::vector<IndexRange> segments;
};

/// Momentum moments of F by quadrature: rho, conditional momentum (zero where
/// rho <= the density floor), raw second moment, and the conditional variance
/// m2/rho - momentum^2. Throws degenerate_distribution when rho is below the
/// floor everywhere.
DensityFields extract_moments(const PhaseSpaceDistribution& F);

/// Conditional momentum variance by direct quadrature of [p - p(x)]^2 F,
/// normalized by rho. Algebraically identical to fields.dispersion; kept as an
/// independent route for cross-checking.
Field momentum_dispersion_direct(const PhaseSpaceDistribution& F, const DensityFields& fields);

/// Pointwise residual of the Liouville transport equation,
///   dF/dt + (p/m) dF/dx - V'(x) dF/dp,
/// with the time derivative from a centered snapshot triple. The 2-point
/// boundary margin (both axes) is zeroed.
Array2<double> liouville_residual(const PhaseSpaceDistribution& prev,
                                  const PhaseSpaceDistribution& curr,
                                  const PhaseSpaceDistribution& next);

/// Residual of the probability continuity equation,
///   d(rho)/dt + (1/m) d(momentum * rho)/dx.
Field continuity_residual(const DensityFields& prev, const DensityFields& curr,
                          const DensityFields& next, double mass, double dt);

/// Residual of the first momentum moment of the Liouville equation,
///   d(rho p)/dt + (1/m) dM2/dx + V' rho.
Field momentum_transport_residual(const PhaseSpaceDistribution& prev,
                                  const PhaseSpaceDistribution& curr,
                                  const PhaseSpaceDistribution& next);

/// Mean statistical energy density
///   H(x) = p(x)^2/(2m) + V(x) - (hbar^2/8m) d^2 ln rho / dx^2,
/// with the log-derivative formed from rho derivatives (robust in the tails).
Field statistical_hamiltonian(const DensityFields& fields, const Field& V, double mass,
                              double hbar);

/// The bracket H - (hbar^2 / 8 m rho) d^2 rho / dx^2 driving the statistical
/// Hamilton equation. For a real stationary state this is the constant energy.
/// Evaluated on node-free segments of rho (amplitude route: the quantum part
/// collapses to -(hbar^2/2m) R''/R with R = sqrt(rho)); zero elsewhere.
SegmentedField statistical_hamilton_bracket(const DensityFields& fields, const Field& V,
                                            double mass, double hbar);

/// Residual of the statistical Hamilton equation,
///   dp/dt + d/dx [ bracket ],
/// on the bracket's node-free segments, margin-zeroed.
SegmentedField statistical_hamilton_residual(const DensityFields& prev,
                                             const DensityFields& curr,
                                             const DensityFields& next, const Field& V,
                                             double mass, double hbar, double dt);

/// The fluctuation-induced part of the bracket alone: -(hbar^2/2m) R''/R.
/// Identically zero for uniform rho (dispersion-free reduction).
SegmentedField statistical_quantum_term(const DensityFields& fields, double mass, double hbar);

/// Classical counterpart dp/dt + d/dx [ p^2/2m + V ] for comparison with the
/// dispersion-free reduction of the statistical Hamilton equation.
Field classical_hamilton_residual(const DensityFields& prev, const DensityFields& curr,
                                  const DensityFields& next, const Field& V, double mass,
                                  double dt);

}  // namespace mlab
