#include "spinboost/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost {

std::vector<double> uniform_xi_grid(double xi_min, double xi_max, int steps) {
    if (steps < 2 || xi_min >= xi_max)
        throw std::invalid_argument("uniform_xi_grid: need xi_min < xi_max, steps >= 2");
    std::vector<double> xi(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        xi[static_cast<std::size_t>(i)] =
            xi_min + (xi_max - xi_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return xi;
}

DensityMatrix boosted_spin_density(const WaveFunction& wf, double xi) {
    if (std::abs(norm(wf) - 1.0) > 1e-4)
        throw std::invalid_argument("boosted_spin_density: state is not normalized");

    const auto& grid = wf.grid;
    const double m = grid.mass;
    const double ch = std::cosh(xi), sh = std::sinh(xi);
    const double ch2 = std::cosh(0.5 * xi), sh2 = std::sinh(0.5 * xi);

    double r00 = 0.0, r11 = 0.0;
    complexd r01{0.0, 0.0};
    for (std::size_t iz = 0; iz < grid.nz(); ++iz) {
        const double z = grid.pz[iz];
        for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
            const double y = grid.py[iy];
            const double wyz = grid.wy[iy] * grid.wz[iz];
            for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
                const double x = grid.px[ix];
                const double E = std::sqrt(m * m + x * x + y * y + z * z);
                const double w = grid.wx[ix] * wyz / (2.0 * E);
                const auto [alpha, beta] = wigner_coefficients(E, z, m, ch2, sh2, ch, sh);
                const Spinor& amp = wf.amplitudes[grid.index(ix, iy, iz)];
                const complexd u0 = alpha * amp.up + beta * complexd{x, -y} * amp.down;
                const complexd u1 = -beta * complexd{x, y} * amp.up + alpha * amp.down;
                r00 += w * std::norm(u0);
                r11 += w * std::norm(u1);
                r01 += w * u0 * std::conj(u1);
            }
        }
    }
    return {complexd{r00, 0.0}, r01, std::conj(r01), complexd{r11, 0.0}};
}

EntropyCurve entropy_curve(const BoostScenario& scenario) {
    if (scenario.xi_values.empty())
        throw std::invalid_argument("entropy_curve: no rapidity values");
    if (scenario.xi_values.front() < 0.0)
        throw std::invalid_argument("entropy_curve: rapidities must be >= 0");
    for (std::size_t i = 1; i < scenario.xi_values.size(); ++i)
        if (scenario.xi_values[i] <= scenario.xi_values[i - 1])
            throw std::invalid_argument("entropy_curve: rapidities must increase strictly");

    const auto [px0, pz0] = momentum_from_scenario(scenario.v1, scenario.theta);
    const GaussianSpec spec{scenario.sigma_over_m, px0, pz0, 1.0};
    const WaveFunction wf =
        x_symmetric_gaussian(spec, build_grid(spec, scenario.nodes_per_axis));

    EntropyCurve curve;
    curve.scenario = scenario;
    curve.points.reserve(scenario.xi_values.size());
    for (const double xi : scenario.xi_values) {
        const double S = von_neumann_entropy(boosted_spin_density(wf, xi));
        curve.points.push_back({xi, std::tanh(xi), S});
    }
    return curve;
}

std::optional<double> saturation_level(const EntropyCurve& curve, double tail_fraction,
                                       double tol) {
    const std::size_t n = curve.points.size();
    if (n < 8) throw std::invalid_argument("saturation_level: need at least 8 points");
    if (tail_fraction <= 0.0 || tail_fraction >= 1.0)
        throw std::invalid_argument("saturation_level: tail_fraction must lie in (0, 1)");

    const auto count = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(tail_fraction * static_cast<double>(n))));
    double lo = curve.points[n - count].entropy, hi = lo, sum = 0.0;
    for (std::size_t i = n - count; i < n; ++i) {
        const double s = curve.points[i].entropy;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
        sum += s;
    }
    if (hi - lo > tol) return std::nullopt;
    return sum / static_cast<double>(count);
}

EntropyCurve::Point find_peak(const EntropyCurve& curve) {
    if (curve.points.empty()) throw std::invalid_argument("find_peak: empty curve");
    EntropyCurve::Point best = curve.points.front();
    for (const auto& p : curve.points)
        if (p.entropy > best.entropy) best = p;  // strict: ties keep the earlier xi
    return best;
}

}  // namespace spinboost
