#pragma once

#include <array>
#include <cstddef>

// Lorentz group numerics for massive particles: canonical boosts, boost
// composition, polar (rotation x boost) splitting, and the closed-form
// Wigner rotation angle/axis. Metric signature (+,-,-,-), time index 0,
// natural units c = 1. All transforms here are proper orthochronous.

namespace spinboost {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Vec3 normalized() const;  // throws std::domain_error on zero vector

    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Lorentz factor gamma = (1 - v^2)^(-1/2). Throws std::domain_error for
// speed < 0 or speed >= 1.
double lorentz_factor(double speed);

// Two boost speeds and the angle between their directions; input to the
// closed-form Wigner angle.
struct BoostPair {
    double v1;
    double v2;
    double theta;  // radians, [0, pi]
};

// On-shell energy-momentum of a massive particle, components in mass units.
struct FourMomentum {
    double E;
    double px;
    double py;
    double pz;
    double m;

    static FourMomentum on_shell(const Vec3& p, double mass);

    Vec3 spatial() const { return {px, py, pz}; }
    double spatial_norm() const;
    double speed() const { return spatial_norm() / E; }
    bool is_on_shell(double rel_tol = 1e-12) const;
};

// 4x4 real matrix acting on (E, px, py, pz) columns.
struct LorentzTransform {
    std::array<double, 16> a{};  // row-major

    static LorentzTransform identity();

    double& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }

    LorentzTransform operator*(const LorentzTransform& o) const;
    LorentzTransform transposed() const;

    double determinant() const;
    // max |(L^T eta L - eta)_ij| over entries, eta = diag(+,-,-,-)
    double metric_defect() const;
    bool preserves_metric(double tol = 1e-10) const { return metric_defect() <= tol; }
    bool is_proper_orthochronous(double tol = 1e-9) const;
};

// Canonical (rotation-free) boost: maps (m, 0) to (gamma m, gamma m v).
// Throws std::domain_error for |v| >= 1.
LorentzTransform boost_matrix(const Vec3& velocity);

// Canonical boost with speed tanh(xi) along a unit direction, built from
// cosh/sinh directly so it stays accurate at large rapidity. Throws
// std::domain_error if the direction is not unit length (tol 1e-12).
LorentzTransform boost_from_rapidity(double xi, const Vec3& direction);

// Spatial rotation by angle about a unit axis, trivial time row/column.
LorentzTransform rotation_matrix(const Vec3& axis, double angle);

// Matrix product second * first ("apply first, then second") with input
// validation; both factors must be proper orthochronous Lorentz transforms.
LorentzTransform compose(const LorentzTransform& second, const LorentzTransform& first);

struct PolarDecomposition {
    LorentzTransform rotation;  // trivial time row/column, orthogonal 3x3 block
    LorentzTransform boost;     // symmetric canonical boost
};

// Split L = rotation * boost. The boost velocity is read off the first
// column (v_i = L(i,0)/L(0,0)), the canonical boost formed from it is
// inverted and left-multiplied onto L. Exact for SO(3,1); throws
// std::domain_error if L is not proper orthochronous.
PolarDecomposition polar_decompose(const LorentzTransform& L);

// Wigner rotation magnitude for the composition of two boosts:
//   tan(omega/2) = sin(theta) / (cos(theta) + D),
//   D = sqrt( (g1+1)/(g1-1) * (g2+1)/(g2-1) ).
// Returns omega in [0, pi); 0 when either speed vanishes (D diverges).
// Throws std::domain_error for speeds outside [0, 1).
double wigner_angle(const BoostPair& pair);

// Same angle with the second boost given as a rapidity; uses
// (g2+1)/(g2-1) = coth^2(xi/2), stable for any xi >= 0.
double wigner_angle_rapidity(double v1, double theta, double xi);

// Rotation axis n = normalize(v2_dir x v1_dir), orthogonal to the plane of
// the two boosts. Throws std::domain_error for (anti)collinear directions,
// where the rotation angle is zero and no axis is defined.
Vec3 wigner_axis(const Vec3& v1_dir, const Vec3& v2_dir);

// L applied to p; the mass label is carried through unchanged.
FourMomentum apply(const LorentzTransform& L, const FourMomentum& p);

struct RotationAngleAxis {
    double angle = 0.0;  // [0, pi]
    Vec3 axis{0.0, 0.0, 1.0};
    bool degenerate = false;  // angle ~ 0 or ~ pi: axis ill-determined
};

// Angle/axis of the spatial 3x3 block of a rotation-type transform.
RotationAngleAxis rotation_angle_axis(const LorentzTransform& R);

}  // namespace spinboost
