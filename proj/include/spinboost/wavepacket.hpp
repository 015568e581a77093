#pragma once

#include <cstddef>
#include <vector>

#include "spinboost/spin.hpp"

// Momentum-space states on uniform Cartesian grids: the x-symmetric
// two-lobe Gaussian, the invariant integration measure d^3p / (2E), and the
// scenario geometry mapping a packet speed and boost angle to lobe centers.
// Momenta are in mass units; the mass defaults to 1.

namespace spinboost {

// Two-lobe Gaussian parameters: lobe centers at (+-px0, 0, pz0), common
// width sigma. pz0 is signed (negative for boost angles beyond 90 degrees).
struct GaussianSpec {
    double sigma;
    double px0;
    double pz0;
    double mass = 1.0;
};

struct ScenarioMomentum {
    double px0;
    double pz0;
};

// Rest-frame lobe centers for a packet moving at speed v1 at angle theta
// from the +z boost axis: |p0| = lorentz_factor(v1) m v1, px0 = |p0| sin(theta),
// pz0 = |p0| cos(theta). Throws std::domain_error unless 0 < v1 < 1.
ScenarioMomentum momentum_from_scenario(double v1, double theta, double mass = 1.0);

// Uniform Cartesian product grid with trapezoid quadrature weights per
// axis; the invariant-measure weight of node (ix,iy,iz) is
// wx wy wz / (2 E(p)).
struct MomentumGrid {
    std::vector<double> px, py, pz;  // strictly increasing nodes per axis
    std::vector<double> wx, wy, wz;  // trapezoid weights (spacing, halved at ends)
    double mass = 1.0;

    std::size_t nx() const { return px.size(); }
    std::size_t ny() const { return py.size(); }
    std::size_t nz() const { return pz.size(); }
    std::size_t size() const { return nx() * ny() * nz(); }
    // x fastest, z slowest; matches the fixed accumulation order
    std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return (iz * ny() + iy) * nx() + ix;
    }
    double energy(std::size_t ix, std::size_t iy, std::size_t iz) const;
    double measure_weight(std::size_t ix, std::size_t iy, std::size_t iz) const;
    // grid extends at least margin_sigmas * sigma beyond every lobe center
    bool covers(const GaussianSpec& spec, double margin_sigmas = 5.0) const;
};

// Grid spanning [-px0 - margin s, px0 + margin s] x [-margin s, margin s]
// x [pz0 - margin s, pz0 + margin s]; x and y nodes are mirror-symmetric
// bit for bit. Throws std::invalid_argument for nodes_per_axis < 8.
MomentumGrid build_grid(const GaussianSpec& spec, int nodes_per_axis,
                        double margin_sigmas = 5.0);

// Spinor-valued amplitudes over a grid, normalized so that
// sum_p sum_lambda |psi_lambda(p)|^2 w(p) = 1.
struct WaveFunction {
    MomentumGrid grid;
    std::vector<Spinor> amplitudes;  // one per node, MomentumGrid::index order
};

// Product state psi(p) |0>: the amplitude is the square root of
//   (1/N) exp(-(py^2 + (pz-pz0)^2)/(2 s^2))
//       * [exp(-(px-px0)^2/(2 s^2)) + exp(-(px+px0)^2/(2 s^2))],
// with N fixed numerically so the quadrature norm is 1. Amplitudes are real,
// non-negative, and exactly symmetric under px -> -px. Throws
// std::invalid_argument if the grid does not cover the spec.
WaveFunction x_symmetric_gaussian(const GaussianSpec& spec, const MomentumGrid& grid);

// Quadrature norm sum_p sum_lambda |psi_lambda(p)|^2 w(p), accumulated in
// fixed z-outer, y-middle, x-inner order.
double norm(const WaveFunction& wf);

}  // namespace spinboost
