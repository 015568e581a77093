#pragma once

#include <optional>
#include <vector>

#include "spinboost/wavepacket.hpp"

// Pipeline core: boost a momentum-space state along +z, trace out momentum
// by quadrature to get the reduced 2x2 spin state, and sweep rapidity to
// produce entropy curves with saturation/peak analysis.
//
// The reduction is evaluated in the rest-frame momentum variable, where the
// invariant measure makes the change of variables exact:
//   rho_S = sum_p w(p) U(R(Lambda(xi), p)) psi(p) psi(p)^dagger U^dagger.
// No resampling onto a boosted grid is needed.

namespace spinboost {

struct BoostScenario {
    double v1;               // packet-center speed, (0, 1)
    double theta;            // boost angle in radians, (0, pi)
    double sigma_over_m = 1.0;
    std::vector<double> xi_values;  // strictly increasing, first >= 0
    int nodes_per_axis = 48;
};

struct EntropyCurve {
    struct Point {
        double xi;
        double v2;  // tanh(xi)
        double entropy;
    };
    std::vector<Point> points;
    BoostScenario scenario;
};

// Uniform rapidity grid, endpoints included.
std::vector<double> uniform_xi_grid(double xi_min, double xi_max, int steps);

// Reduced spin density matrix after a boost of rapidity xi along +z.
// Accumulated in fixed z-outer, y-middle, x-inner order so results are
// reproducible bit for bit. Throws std::invalid_argument if the state norm
// is off by more than 1e-4.
DensityMatrix boosted_spin_density(const WaveFunction& wf, double xi);

// Build the scenario's x-symmetric Gaussian once, then evaluate the spin
// entropy at every rapidity in scenario order.
EntropyCurve entropy_curve(const BoostScenario& scenario);

// Mean of the trailing tail_fraction of points if their spread is within
// tol; std::nullopt when the tail has not flattened. Requires >= 8 points.
std::optional<double> saturation_level(const EntropyCurve& curve,
                                       double tail_fraction = 0.25, double tol = 1e-3);

// Point of maximum entropy; ties break toward the smallest rapidity.
EntropyCurve::Point find_peak(const EntropyCurve& curve);

}  // namespace spinboost
