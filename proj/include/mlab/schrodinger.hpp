#pragma once

#include <string>

#include "mlab/grid.hpp"
#include "mlab/phase_space.hpp"
#include "mlab/wigner_moyal.hpp"

namespace mlab {

/// Complex amplitude on a spatial grid with the units it was built in.
struct Wavefunction {
    Grid1D grid;
    std::vector<std::complex<double>> values;
    double time = 0.0;
    double hbar = 1.0;
    double mass = 1.0;

    Wavefunction(Grid1D g, std::vector<std::complex<double>> v, double t, double hb, double m);

    /// Quadrature norm, integral of |psi|^2 dx.
    double norm() const;

    ComplexField field() const { return ComplexField(grid, values); }
};

/// Polar decomposition psi = R exp(i s / hbar). The phase action s is
/// unwrapped along the grid and anchored to zero at the leftmost point of each
/// node-free segment; R-division quantities are only meaningful on `segments`.
struct MadelungFields {
    Field R;
    Field s;
    Field p_field;  // ds/dx
    std::vector<IndexRange> segments;
};

/// Eigenpair of the stationary problem.
struct StationaryState {
    double energy;
    Wavefunction psi;
};

/// One spontaneous-transition channel out of a metastable state.
struct DecayChannel {
    std::string label;
    double rate;    // transition rate, 1/time
    double energy;  // final-state energy
};

/// A metastable initial state and its open channels.
struct DecaySpec {
    std::string initial_label;
    double initial_energy;
    std::vector<DecayChannel> channels;
};

/// Exponentially damped bound state: amplitude psi_n * exp(-t/tau), so the
/// norm decays as exp(-2 t / tau).
struct DecayingState {
    Wavefunction psi_n;
    double tau;
    double time;

    ComplexField amplitude() const;
    double norm() const;
};

/// Harmonic-oscillator eigenstate by the stable normalized-Hermite recurrence;
/// energy (n + 1/2) hbar omega; n is capped at 30 where the recurrence is
/// dependable in double precision.
StationaryState ho_eigenstate(int n, const Grid1D& grid, double hbar = 1.0, double mass = 1.0,
                              double omega = 1.0);

/// |psi_n|^2 for the harmonic oscillator (analytic route, no solver).
Field ho_density(int n, const Grid1D& grid, double hbar = 1.0, double mass = 1.0,
                 double omega = 1.0);

/// Lowest k eigenpairs of -(hbar^2/2m) d^2/dx^2 + V with zero boundary values,
/// via the centered-difference matrix. Eigenfunctions are real,
/// quadrature-normalized, and sign-fixed so the first significant interior
/// value is positive.
std::vector<StationaryState> solve_stationary(const Field& V, double mass, double hbar,
                                              std::size_t k);

/// Polar decomposition with node handling (segments split where |psi| drops
/// to the node floor, 3-point exclusion radius).
MadelungFields madelung_decompose(const Wavefunction& psi);

/// Residual of the quantum Hamilton-Jacobi equation
///   ds/dt + (1/2m)(ds/dx)^2 + V - (hbar^2/2mR) d^2R/dx^2
/// from a centered snapshot triple, on the middle snapshot's segments.
/// Snapshot phases must share one reference (no per-snapshot re-anchoring).
SegmentedField qhj_residual(const MadelungFields& prev, const MadelungFields& curr,
                            const MadelungFields& next, const Field& V, double mass, double hbar,
                            double dt);

/// Quantum potential Q = -(hbar^2/2m) R''/R on node-free segments.
SegmentedField quantum_potential(const Field& R, double mass, double hbar);

/// Unitary implicit-midpoint (Crank-Nicolson) propagation with zero boundary
/// values. Requires the accuracy guard dt * max|V| / hbar < 0.5.
Wavefunction evolve(const Wavefunction& psi, const Field& V, double dt, std::size_t steps);

/// Mean lifetime 1/sum(rates). All-zero rates are a legitimate stable state
/// and return +infinity; a channel above the initial energy is an error (only
/// spontaneous transitions are modeled).
double decay_lifetime(const DecaySpec& spec);

/// Wrap a normalized bound state as an exponentially decaying one.
DecayingState metastable_state(const Wavefunction& psi_n, double tau, double t);

/// Residual of the amplitude-decay continuity equation
///   d(R^2)/dt + d(R^2 s'/m)/dx + 2 R^2 / tau.
/// The amplitude carries exp(-t/tau), so the density sink rate is 2/tau.
Field sink_continuity_residual(const DecayingState& prev, const DecayingState& curr,
                               const DecayingState& next);

/// Pointwise magnitude of the damped characteristic-function transport residual
///   -i hbar dZ/dt - (hbar^2/m) d^2 Z / dx d(dx) + dx V'(x) Z - 2 i hbar Z / tau
/// from a centered snapshot triple. tau is the amplitude lifetime
/// (+infinity turns the sink off); margins are zeroed on both axes.
Array2<double> master_zq_residual(const CharacteristicFunction& prev,
                                  const CharacteristicFunction& curr,
                                  const CharacteristicFunction& next, const Field& V, double mass,
                                  double tau, double dt);

}  // namespace mlab
