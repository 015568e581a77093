#include "spinboost/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost {

ScenarioMomentum momentum_from_scenario(double v1, double theta, double mass) {
    if (v1 <= 0.0 || v1 >= 1.0)
        throw std::domain_error("momentum_from_scenario: v1 must lie in (0, 1)");
    const double p0 = lorentz_factor(v1) * mass * v1;
    return {p0 * std::sin(theta), p0 * std::cos(theta)};
}

double MomentumGrid::energy(std::size_t ix, std::size_t iy, std::size_t iz) const {
    const double x = px[ix], y = py[iy], z = pz[iz];
    return std::sqrt(mass * mass + x * x + y * y + z * z);
}

double MomentumGrid::measure_weight(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return wx[ix] * wy[iy] * wz[iz] / (2.0 * energy(ix, iy, iz));
}

bool MomentumGrid::covers(const GaussianSpec& spec, double margin_sigmas) const {
    const double m = margin_sigmas * spec.sigma;
    const double slack = 1e-9 * (1.0 + std::abs(spec.px0) + std::abs(spec.pz0) + m);
    return px.front() <= -spec.px0 - m + slack && px.back() >= spec.px0 + m - slack &&
           py.front() <= -m + slack && py.back() >= m - slack &&
           pz.front() <= spec.pz0 - m + slack && pz.back() >= spec.pz0 + m - slack;
}

namespace {

// Nodes as center + half-width * t_i with t_{n-1-i} = -t_i exactly, so a
// symmetric range yields bit-symmetric nodes.
std::vector<double> axis_nodes(double lo, double hi, int n) {
    std::vector<double> nodes(static_cast<std::size_t>(n));
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
        nodes[static_cast<std::size_t>(i)] = c + h * t;
    }
    return nodes;
}

std::vector<double> trapezoid_weights(const std::vector<double>& nodes) {
    const double d = nodes[1] - nodes[0];
    std::vector<double> w(nodes.size(), d);
    w.front() = 0.5 * d;
    w.back() = 0.5 * d;
    return w;
}

}  // namespace

MomentumGrid build_grid(const GaussianSpec& spec, int nodes_per_axis, double margin_sigmas) {
    if (nodes_per_axis < 8)
        throw std::invalid_argument("build_grid: need at least 8 nodes per axis");
    if (spec.sigma <= 0.0 || spec.mass <= 0.0 || spec.px0 < 0.0)
        throw std::domain_error("build_grid: need sigma > 0, mass > 0, px0 >= 0");
    const double m = margin_sigmas * spec.sigma;
    MomentumGrid grid;
    grid.mass = spec.mass;
    grid.px = axis_nodes(-(spec.px0 + m), spec.px0 + m, nodes_per_axis);
    grid.py = axis_nodes(-m, m, nodes_per_axis);
    grid.pz = axis_nodes(spec.pz0 - m, spec.pz0 + m, nodes_per_axis);
    grid.wx = trapezoid_weights(grid.px);
    grid.wy = trapezoid_weights(grid.py);
    grid.wz = trapezoid_weights(grid.pz);
    return grid;
}

namespace {

// The bracket of the two-lobe density, before normalization.
inline double lobe_density(double x, double y, double z, const GaussianSpec& s) {
    const double inv2s2 = 1.0 / (2.0 * s.sigma * s.sigma);
    const double dy = y;
    const double dz = z - s.pz0;
    const double xm = x - s.px0;
    const double xp = x + s.px0;
    return std::exp(-(dy * dy + dz * dz) * inv2s2) *
           (std::exp(-xm * xm * inv2s2) + std::exp(-xp * xp * inv2s2));
}

}  // namespace

WaveFunction x_symmetric_gaussian(const GaussianSpec& spec, const MomentumGrid& grid) {
    if (spec.sigma <= 0.0 || spec.mass <= 0.0 || spec.px0 < 0.0)
        throw std::domain_error("x_symmetric_gaussian: need sigma > 0, mass > 0, px0 >= 0");
    if (!grid.covers(spec))
        throw std::invalid_argument(
            "x_symmetric_gaussian: grid does not extend 5 sigma beyond the lobes");

    const std::size_t nx = grid.nx(), ny = grid.ny(), nz = grid.nz();
    std::vector<double> density(grid.size());
    double norm_sum = 0.0;
    for (std::size_t iz = 0; iz < nz; ++iz)
        for (std::size_t iy = 0; iy < ny; ++iy)
            for (std::size_t ix = 0; ix < nx; ++ix) {
                const double g = lobe_density(grid.px[ix], grid.py[iy], grid.pz[iz], spec);
                density[grid.index(ix, iy, iz)] = g;
                norm_sum += g * grid.measure_weight(ix, iy, iz);
            }

    WaveFunction wf;
    wf.grid = grid;
    wf.amplitudes.resize(density.size());
    const double inv_norm = 1.0 / norm_sum;
    for (std::size_t i = 0; i < density.size(); ++i)
        wf.amplitudes[i] = {complexd{std::sqrt(density[i] * inv_norm), 0.0}, complexd{}};
    return wf;
}

double norm(const WaveFunction& wf) {
    const auto& grid = wf.grid;
    double sum = 0.0;
    for (std::size_t iz = 0; iz < grid.nz(); ++iz)
        for (std::size_t iy = 0; iy < grid.ny(); ++iy)
            for (std::size_t ix = 0; ix < grid.nx(); ++ix)
                sum += wf.amplitudes[grid.index(ix, iy, iz)].norm_sq() *
                       grid.measure_weight(ix, iy, iz);
    return sum;
}

}  // namespace spinboost
