#pragma once

#include <complex>
#include <span>

#include "mlab/grid.hpp"

namespace mlab {

/// Composite Simpson quadrature over a uniform axis. When the sample count is
/// even (an odd panel count), the final panel falls back to the trapezoid rule.
/// Fourth-order accurate for smooth integrands; exponentially accurate for
/// smooth integrands that decay below roundoff before the window ends.
double integrate(std::span<const double> values, double spacing);
std::complex<double> integrate(std::span<const std::complex<double>> values, double spacing);

double integrate(const Field& f);
std::complex<double> integrate(const ComplexField& f);

/// Simpson weight of sample i on an n-point axis (spacing folded in by caller).
double simpson_weight(std::size_t i, std::size_t n);

}  // namespace mlab
