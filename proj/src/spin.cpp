#include "spinboost/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinboost {

double Spinor::norm() const { return std::sqrt(norm_sq()); }

SpinorRotation SpinorRotation::dagger() const {
    return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
}

SpinorRotation SpinorRotation::operator*(const SpinorRotation& o) const {
    return {u00 * o.u00 + u01 * o.u10, u00 * o.u01 + u01 * o.u11,
            u10 * o.u00 + u11 * o.u10, u10 * o.u01 + u11 * o.u11};
}

double SpinorRotation::unitarity_defect() const {
    const SpinorRotation p = dagger() * (*this);
    double worst = std::abs(p.u00 - complexd{1.0, 0.0});
    worst = std::max(worst, std::abs(p.u11 - complexd{1.0, 0.0}));
    worst = std::max(worst, std::abs(p.u01));
    worst = std::max(worst, std::abs(p.u10));
    return worst;
}

bool SpinorRotation::is_special_unitary(double tol) const {
    return unitarity_defect() <= tol && std::abs(det() - complexd{1.0, 0.0}) <= tol;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = std::abs(r00.imag());
    worst = std::max(worst, std::abs(r11.imag()));
    worst = std::max(worst, std::abs(r01 - std::conj(r10)));
    return worst;
}

std::pair<double, double> DensityMatrix::eigenvalues() const {
    const double tr = trace_real();
    const double det = (r00 * r11 - r01 * r10).real();
    const double disc = std::max(0.25 * tr * tr - det, 0.0);
    const double root = std::sqrt(disc);
    return {0.5 * tr + root, 0.5 * tr - root};
}

bool DensityMatrix::is_valid(double herm_tol, double trace_tol, double psd_tol) const {
    if (hermiticity_defect() > herm_tol) return false;
    if (std::abs(trace_real() - 1.0) > trace_tol) return false;
    return eigenvalues().second >= -psd_tol;
}

DensityMatrix operator+(const DensityMatrix& a, const DensityMatrix& b) {
    return {a.r00 + b.r00, a.r01 + b.r01, a.r10 + b.r10, a.r11 + b.r11};
}

DensityMatrix operator*(double w, const DensityMatrix& rho) {
    return {w * rho.r00, w * rho.r01, w * rho.r10, w * rho.r11};
}

SpinorRotation wigner_spinor(double xi, const FourMomentum& p) {
    if (!p.is_on_shell())
        throw std::domain_error("wigner_spinor: momentum is off-shell");
    const auto [alpha, beta] =
        wigner_coefficients(p.E, p.pz, p.m, std::cosh(0.5 * xi), std::sinh(0.5 * xi),
                            std::cosh(xi), std::sinh(xi));
    return {complexd{alpha, 0.0}, beta * complexd{p.px, -p.py},
            -beta * complexd{p.px, p.py}, complexd{alpha, 0.0}};
}

SpinorRotation su2_from_axis_angle(const Vec3& axis, double omega) {
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw std::domain_error("su2_from_axis_angle: axis must be a unit vector");
    const double c = std::cos(0.5 * omega);
    const double s = std::sin(0.5 * omega);
    return {complexd{c, -s * axis.z}, complexd{-s * axis.y, -s * axis.x},
            complexd{s * axis.y, -s * axis.x}, complexd{c, s * axis.z}};
}

RotationAngleAxis rotation_angle_of(const SpinorRotation& U) {
    for (const double sign : {1.0, -1.0}) {
        const double defect =
            std::max({std::abs(U.u00 - complexd{sign, 0.0}),
                      std::abs(U.u11 - complexd{sign, 0.0}), std::abs(U.u01),
                      std::abs(U.u10)});
        if (defect < 1e-9) return {0.0, {0.0, 0.0, 1.0}, true};
    }
    const double c = 0.5 * (U.u00 + U.u11).real();
    // sin(omega/2) * axis, from the anti-Hermitian traceless part
    Vec3 w{-0.5 * (U.u01.imag() + U.u10.imag()), 0.5 * (U.u10.real() - U.u01.real()),
           0.5 * (U.u11.imag() - U.u00.imag())};
    const double s = w.norm();
    double angle = 2.0 * std::atan2(s, c);
    Vec3 axis = w.normalized();
    if (angle > std::numbers::pi) {  // fold to [0, pi], orientation moves into the axis
        angle = 2.0 * std::numbers::pi - angle;
        axis = -axis;
    }
    return {angle, axis, false};
}

Vec3 bloch_vector(const DensityMatrix& rho) {
    return {(rho.r01 + rho.r10).real(), (complexd{0.0, 1.0} * (rho.r01 - rho.r10)).real(),
            (rho.r00 - rho.r11).real()};
}

double von_neumann_entropy(const DensityMatrix& rho) {
    auto [l1, l2] = rho.eigenvalues();
    double entropy = 0.0;
    for (double l : {l1, l2}) {
        if (l < -1e-9 || l > 1.0 + 1e-9)
            throw std::domain_error("von_neumann_entropy: eigenvalue outside [0, 1]");
        l = std::clamp(l, 0.0, 1.0);
        if (l > 0.0) entropy -= l * std::log2(l);
    }
    return entropy;
}

DensityMatrix project(const Spinor& chi) {
    const double n2 = chi.norm_sq();
    if (n2 <= 0.0) throw std::domain_error("project: zero spinor");
    const double inv = 1.0 / n2;
    return {inv * chi.up * std::conj(chi.up), inv * chi.up * std::conj(chi.down),
            inv * chi.down * std::conj(chi.up), inv * chi.down * std::conj(chi.down)};
}

}  // namespace spinboost
