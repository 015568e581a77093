#pragma once

#include <complex>

#include "spinboost/lorentz.hpp"

// SU(2) machinery for a boosted spin-1/2: the momentum-dependent spinor
// representation of the Wigner rotation for a boost along +z, Bloch-vector
// helpers, and von Neumann entropy of a qubit density matrix. Basis order
// throughout: lambda = +1/2 first, lambda = -1/2 second; standard Pauli
// conventions.

namespace spinboost {

using complexd = std::complex<double>;

struct Spinor {
    complexd up{0.0, 0.0};
    complexd down{0.0, 0.0};

    double norm_sq() const { return std::norm(up) + std::norm(down); }
    double norm() const;
};

// 2x2 complex matrix, intended to hold an element of SU(2).
struct SpinorRotation {
    complexd u00{1.0, 0.0}, u01{0.0, 0.0};
    complexd u10{0.0, 0.0}, u11{1.0, 0.0};

    SpinorRotation dagger() const;
    Spinor operator*(const Spinor& s) const {
        return {u00 * s.up + u01 * s.down, u10 * s.up + u11 * s.down};
    }
    SpinorRotation operator*(const SpinorRotation& o) const;
    complexd det() const { return u00 * u11 - u01 * u10; }
    // max entry deviation of U^dagger U from the identity
    double unitarity_defect() const;
    bool is_special_unitary(double tol = 1e-12) const;
};

// 2x2 spin density matrix; valid states are Hermitian, PSD, unit trace.
struct DensityMatrix {
    complexd r00{0.0, 0.0}, r01{0.0, 0.0};
    complexd r10{0.0, 0.0}, r11{0.0, 0.0};

    double trace_real() const { return r00.real() + r11.real(); }
    double hermiticity_defect() const;
    // eigenvalues {larger, smaller} from the closed 2x2 form
    std::pair<double, double> eigenvalues() const;
    bool is_valid(double herm_tol = 1e-12, double trace_tol = 1e-10,
                  double psd_tol = 1e-12) const;
};

DensityMatrix operator+(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix operator*(double w, const DensityMatrix& rho);

// alpha/beta of the z-boost Wigner rotation at one momentum:
//   alpha = sqrt((E+m)/(E'+m)) (cosh(xi/2) + pz/(E+m) sinh(xi/2))
//   beta  = sinh(xi/2) / sqrt((E+m)(E'+m)),  E' = E cosh(xi) + pz sinh(xi)
// Hot-path core shared by wigner_spinor and the quadrature engine; the
// hyperbolics are passed in so sweeps hoist them out of grid loops.
struct WignerCoefficients {
    double alpha;
    double beta;
};

inline WignerCoefficients wigner_coefficients(double E, double pz, double m,
                                              double cosh_half, double sinh_half,
                                              double cosh_xi, double sinh_xi) {
    const double Em = E + m;
    const double Epm = E * cosh_xi + pz * sinh_xi + m;
    const double root = std::sqrt(Em * Epm);
    return {(Em * cosh_half + pz * sinh_half) / root, sinh_half / root};
}

// Spin-1/2 representation of the Wigner rotation R(Lambda(xi), p) for a
// boost of rapidity xi along +z:
//   [ alpha            beta (px - i py) ]
//   [ -beta (px + i py)    alpha        ]
// Identity for px = py = 0 (collinear boost). Throws std::domain_error if
// p is off-shell.
SpinorRotation wigner_spinor(double xi, const FourMomentum& p);

// U = cos(omega/2) I - i sin(omega/2) (axis . sigma). Unit axis required.
SpinorRotation su2_from_axis_angle(const Vec3& axis, double omega);

// Inverse of su2_from_axis_angle up to the global SU(2) sign: angle in
// [0, pi] with the axis carrying orientation. U within 1e-9 of +/-identity
// reports angle 0 with the degenerate flag set.
RotationAngleAxis rotation_angle_of(const SpinorRotation& U);

// n = (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z))
Vec3 bloch_vector(const DensityMatrix& rho);

// S = -sum_i l_i log2(l_i), 0 log 0 := 0. Eigenvalues within 1e-9 below 0
// (or above 1) are clipped to the boundary; anything further out throws.
double von_neumann_entropy(const DensityMatrix& rho);

// Rank-1 projector |chi><chi| / <chi|chi|>. Throws on the zero spinor.
DensityMatrix project(const Spinor& chi);

}  // namespace spinboost
