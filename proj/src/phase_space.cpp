#include "mlab/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlab/derivative.hpp"
#include "mlab/errors.hpp"
#include "mlab/quadrature.hpp"

namespace mlab {

namespace {

void check_snapshot_compatibility(const PhaseSpaceDistribution& a,
                                  const PhaseSpaceDistribution& b) {
    if (!a.x_grid.same_as(b.x_grid) || !a.p_grid.same_as(b.p_grid))
        throw std::invalid_argument("snapshots must share grids");
    if (a.mass != b.mass) throw std::invalid_argument("snapshots must share the mass");
    if (a.potential.values != b.potential.values)
        throw std::invalid_argument("snapshots must share the potential");
}

double centered_dt(double t_prev, double t_curr, double t_next) {
    const double fwd = t_next - t_curr;
    const double bwd = t_curr - t_prev;
    if (std::abs(fwd - bwd) > 1e-9 * std::max(1.0, std::abs(fwd)))
        throw std::invalid_argument("snapshot times must be centered");
    if (!(fwd > 0.0)) throw std::invalid_argument("snapshot times must increase");
    return fwd;
}

void zero_margins(Field& f, std::size_t margin) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < std::min(margin, n); ++i) {
        f[i] = 0.0;
        f[n - 1 - i] = 0.0;
    }
}

void zero_margins(Array2<double>& a, std::size_t margin) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i < margin || i + margin >= a.rows() || j < margin || j + margin >= a.cols())
                a(i, j) = 0.0;
}

}  // namespace

PhaseSpaceDistribution::PhaseSpaceDistribution(Grid1D xg, Grid1D pg, Array2<double> f, double t,
                                               double m, Field v)
    : x_grid(xg), p_grid(pg), values(std::move(f)), time(t), mass(m), potential(std::move(v)) {
    if (values.rows() != x_grid.size() || values.cols() != p_grid.size())
        throw std::invalid_argument("distribution shape does not match grids");
    if (!potential.grid.same_as(x_grid))
        throw std::invalid_argument("potential must live on the x grid");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    double max_abs = 0.0;
    for (double x : values.data()) {
        if (!std::isfinite(x)) throw std::invalid_argument("distribution has non-finite samples");
        max_abs = std::max(max_abs, std::abs(x));
    }
    for (double x : values.data())
        if (x < -1e-12 * max_abs) throw std::invalid_argument("distribution must be nonnegative");
    const double norm = total_probability();
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("distribution must integrate to 1 within 1e-6");
}

PhaseSpaceDistribution PhaseSpaceDistribution::sample_normalized(
    const Grid1D& xg, const Grid1D& pg, const std::function<double(double, double)>& f,
    double time, double mass, const std::function<double(double)>& potential) {
    Array2<double> vals(xg.size(), pg.size());
    for (std::size_t i = 0; i < xg.size(); ++i)
        for (std::size_t j = 0; j < pg.size(); ++j) vals(i, j) = f(xg[i], pg[j]);

    std::vector<double> marginal(xg.size());
    for (std::size_t i = 0; i < xg.size(); ++i)
        marginal[i] = integrate(std::span<const double>(vals.row(i)), pg.spacing());
    const double norm = integrate(std::span<const double>(marginal), xg.spacing());
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("cannot normalize distribution");
    for (double& x : vals.data()) x /= norm;

    return PhaseSpaceDistribution(xg, pg, std::move(vals), time, mass,
                                  Field::sample(xg, potential));
}

double PhaseSpaceDistribution::total_probability() const {
    std::vector<double> marginal(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i)
        marginal[i] = integrate(std::span<const double>(values.row(i)), p_grid.spacing());
    return integrate(std::span<const double>(marginal), x_grid.spacing());
}

DensityFields DensityFields::from_conditional(const Field& rho, const Field& momentum,
                                              const Field& dispersion) {
    Field m2(rho.grid, 0.0);
    for (std::size_t i = 0; i < rho.size(); ++i)
        m2[i] = rho[i] * (dispersion[i] + momentum[i] * momentum[i]);
    return DensityFields{rho, momentum, m2, dispersion};
}

void DensityFields::validate() const {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0.0) throw std::domain_error("rho must be nonnegative");
        if (dispersion[i] < -1e-10) throw std::domain_error("dispersion must be nonnegative");
        if (m2[i] < rho[i] * momentum[i] * momentum[i] - 1e-10)
            throw std::domain_error("m2 violates the Cauchy-Schwarz bound");
    }
    const double norm = integrate(rho);
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::domain_error("rho must integrate to 1 within 1e-6");
}

DensityFields extract_moments(const PhaseSpaceDistribution& F) {
    const std::size_t nx = F.x_grid.size();
    const double hp = F.p_grid.spacing();
    Field rho(F.x_grid, 0.0), momentum(F.x_grid, 0.0), m2(F.x_grid, 0.0),
        dispersion(F.x_grid, 0.0);

    std::vector<double> row, p_row, p2_row;
    for (std::size_t i = 0; i < nx; ++i) {
        row = F.values.row(i);
        p_row.resize(row.size());
        p2_row.resize(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double p = F.p_grid[j];
            p_row[j] = p * row[j];
            p2_row[j] = p * p * row[j];
        }
        rho[i] = integrate(std::span<const double>(row), hp);
        m2[i] = integrate(std::span<const double>(p2_row), hp);
        if (rho[i] > kRhoFloor) {
            momentum[i] = integrate(std::span<const double>(p_row), hp) / rho[i];
            dispersion[i] = m2[i] / rho[i] - momentum[i] * momentum[i];
        }
    }

    if (*std::max_element(rho.values.begin(), rho.values.end()) <= kRhoFloor)
        throw degenerate_distribution("density below floor everywhere");

    DensityFields fields{rho, momentum, m2, dispersion};
    fields.validate();
    return fields;
}

Field momentum_dispersion_direct(const PhaseSpaceDistribution& F, const DensityFields& fields) {
    Field out(F.x_grid, 0.0);
    const double hp = F.p_grid.spacing();
    std::vector<double> dev(F.p_grid.size());
    for (std::size_t i = 0; i < F.x_grid.size(); ++i) {
        if (fields.rho[i] <= kRhoFloor) continue;
        const double pbar = fields.momentum[i];
        for (std::size_t j = 0; j < F.p_grid.size(); ++j) {
            const double d = F.p_grid[j] - pbar;
            dev[j] = d * d * F.values(i, j);
        }
        out[i] = integrate(std::span<const double>(dev), hp) / fields.rho[i];
    }
    return out;
}

Array2<double> liouville_residual(const PhaseSpaceDistribution& prev,
                                  const PhaseSpaceDistribution& curr,
                                  const PhaseSpaceDistribution& next) {
    check_snapshot_compatibility(prev, curr);
    check_snapshot_compatibility(curr, next);
    const double dt = centered_dt(prev.time, curr.time, next.time);

    const Array2<double> dF_dx = derivative_axis0(curr.values, curr.x_grid.spacing(), 1);
    const Array2<double> dF_dp = derivative_axis1(curr.values, curr.p_grid.spacing(), 1);
    const Field v_prime = derivative(curr.potential, 1);

    Array2<double> res(curr.values.rows(), curr.values.cols());
    for (std::size_t i = 0; i < res.rows(); ++i) {
        for (std::size_t j = 0; j < res.cols(); ++j) {
            const double dF_dt = (next.values(i, j) - prev.values(i, j)) / (2.0 * dt);
            res(i, j) = dF_dt + (curr.p_grid[j] / curr.mass) * dF_dx(i, j) -
                        v_prime[i] * dF_dp(i, j);
        }
    }
    zero_margins(res, kResidualMargin);
    return res;
}

Field continuity_residual(const DensityFields& prev, const DensityFields& curr,
                          const DensityFields& next, double mass, double dt) {
    if (!prev.rho.grid.same_as(curr.rho.grid) || !next.rho.grid.same_as(curr.rho.grid))
        throw std::invalid_argument("snapshots must share grids");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

    Field flux(curr.rho.grid, 0.0);
    for (std::size_t i = 0; i < flux.size(); ++i)
        flux[i] = curr.momentum[i] * curr.rho[i] / mass;
    const Field dflux = derivative(flux, 1);

    Field res(curr.rho.grid, 0.0);
    for (std::size_t i = 0; i < res.size(); ++i)
        res[i] = (next.rho[i] - prev.rho[i]) / (2.0 * dt) + dflux[i];
    zero_margins(res, kResidualMargin);
    return res;
}

Field momentum_transport_residual(const PhaseSpaceDistribution& prev,
                                  const PhaseSpaceDistribution& curr,
                                  const PhaseSpaceDistribution& next) {
    check_snapshot_compatibility(prev, curr);
    check_snapshot_compatibility(curr, next);
    const double dt = centered_dt(prev.time, curr.time, next.time);

    const DensityFields f_prev = extract_moments(prev);
    const DensityFields f_curr = extract_moments(curr);
    const DensityFields f_next = extract_moments(next);
    const Field dm2 = derivative(f_curr.m2, 1);
    const Field v_prime = derivative(curr.potential, 1);

    Field res(curr.x_grid, 0.0);
    for (std::size_t i = 0; i < res.size(); ++i) {
        const double dpr_dt = (f_next.rho[i] * f_next.momentum[i] -
                               f_prev.rho[i] * f_prev.momentum[i]) /
                              (2.0 * dt);
        res[i] = dpr_dt + dm2[i] / curr.mass + v_prime[i] * f_curr.rho[i];
    }
    zero_margins(res, kResidualMargin);
    return res;
}

Field statistical_hamiltonian(const DensityFields& fields, const Field& V, double mass,
                              double hbar) {
    const Field curv = log_curvature(fields.rho);
    Field H(fields.rho.grid, 0.0);
    for (std::size_t i = 0; i < H.size(); ++i) {
        H[i] = fields.momentum[i] * fields.momentum[i] / (2.0 * mass) + V[i] -
               hbar * hbar / (8.0 * mass) * curv[i];
    }
    return H;
}

SegmentedField statistical_hamilton_bracket(const DensityFields& fields, const Field& V,
                                            double mass, double hbar) {
    Field R(fields.rho.grid, 0.0);
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (fields.rho[i] < 0.0) throw std::domain_error("density must be nonnegative");
        R[i] = std::sqrt(fields.rho[i]);
    }
    const auto segments =
        node_free_segments(fields.rho.values, kRhoFloor, node_threshold(R), 3);
    const Field d2R = derivative(R, 2);

    Field bracket(fields.rho.grid, 0.0);
    for (const IndexRange& seg : segments) {
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            bracket[i] = fields.momentum[i] * fields.momentum[i] / (2.0 * mass) + V[i] -
                         hbar * hbar / (2.0 * mass) * d2R[i] / R[i];
        }
    }
    return SegmentedField{bracket, segments};
}

SegmentedField statistical_hamilton_residual(const DensityFields& prev,
                                             const DensityFields& curr,
                                             const DensityFields& next, const Field& V,
                                             double mass, double hbar, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    SegmentedField bracket = statistical_hamilton_bracket(curr, V, mass, hbar);

    Field res(curr.rho.grid, 0.0);
    std::vector<IndexRange> kept;
    for (const IndexRange& seg : bracket.segments) {
        if (seg.length() < 5) continue;  // too short for a derivative stencil
        std::vector<double> sub(bracket.values.values.begin() + seg.begin,
                                bracket.values.values.begin() + seg.end);
        const auto dsub = derivative_samples(sub, curr.rho.grid.spacing(), 1);
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            const double dp_dt = (next.momentum[i] - prev.momentum[i]) / (2.0 * dt);
            res[i] = dp_dt + dsub[i - seg.begin];
        }
        kept.push_back(seg);
    }
    zero_margins(res, kResidualMargin);
    return SegmentedField{res, kept};
}

SegmentedField statistical_quantum_term(const DensityFields& fields, double mass, double hbar) {
    Field R(fields.rho.grid, 0.0);
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (fields.rho[i] < 0.0) throw std::domain_error("density must be nonnegative");
        R[i] = std::sqrt(fields.rho[i]);
    }
    const auto segments =
        node_free_segments(fields.rho.values, kRhoFloor, node_threshold(R), 3);
    const Field d2R = derivative(R, 2);

    Field q(fields.rho.grid, 0.0);
    for (const IndexRange& seg : segments)
        for (std::size_t i = seg.begin; i < seg.end; ++i)
            q[i] = -hbar * hbar / (2.0 * mass) * d2R[i] / R[i];
    return SegmentedField{q, segments};
}

Field classical_hamilton_residual(const DensityFields& prev, const DensityFields& curr,
                                  const DensityFields& next, const Field& V, double mass,
                                  double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    Field hcl(curr.rho.grid, 0.0);
    for (std::size_t i = 0; i < hcl.size(); ++i)
        hcl[i] = curr.momentum[i] * curr.momentum[i] / (2.0 * mass) + V[i];
    const Field dh = derivative(hcl, 1);

    Field res(curr.rho.grid, 0.0);
    for (std::size_t i = 0; i < res.size(); ++i)
        res[i] = (next.momentum[i] - prev.momentum[i]) / (2.0 * dt) + dh[i];
    zero_margins(res, kResidualMargin);
    return res;
}

}  // namespace mlab
