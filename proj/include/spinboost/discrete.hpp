#pragma once

#include <vector>

#include "spinboost/wavepacket.hpp"

// Finite spin fields over a handful of momenta: a boosted convex sum of
// spin projectors realizes the same reduced spin state as the continuum
// engine, but exactly. The two-point field doubles as the analytic oracle
// for the quadrature pipeline, via the closed form
//   S = H2((1 + |cos omega|)/2)
// with omega the Wigner angle at either lobe.

namespace spinboost {

struct DiscreteSpinField {
    struct Entry {
        FourMomentum momentum;
        double weight;  // convex coefficients, sum to 1
        Spinor spin;    // unit spinor
    };
    std::vector<Entry> entries;
};

// Two equal-weight z-up spins at the scenario lobe centers (+-px0, 0, pz0).
DiscreteSpinField two_point_field(double v1, double theta, double mass = 1.0);

// Four equal-weight z-up spins at (+-p1, 0, 0) and (+-p2, 0, 0). The
// default second radius p2 = 2 p1 is an illustrative choice.
DiscreteSpinField four_spin_field(double p1, double p2 = 0.0, double mass = 1.0);

// rho_S = sum_i w_i U(R(Lambda(xi), p_i)) |s_i><s_i| U^dagger. Throws
// std::domain_error when the weights miss 1 by more than 1e-10.
DensityMatrix discrete_density(const DiscreteSpinField& field, double xi);

// Binary entropy H2(x) = -x log2 x - (1-x) log2 (1-x), H2(0) = H2(1) = 0.
double binary_entropy(double x);

// Spin entropy of the boosted two-point state, via the projector sum.
double two_point_entropy(double v1, double theta, double xi);

// Same quantity through the closed form H2((1 + |cos omega|)/2); kept as an
// independent code path for cross-checking the matrix route.
double two_point_entropy_closed_form(double v1, double theta, double xi);

// xi -> infinity limit of the two-point entropy: the Wigner angle saturates
// at D = sqrt((g1+1)/(g1-1)), which bounds the rotation and hence the
// saturation level for the geometry.
double asymptotic_entropy(double v1, double theta);

}  // namespace spinboost
