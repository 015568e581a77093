#include "spinboost/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost {

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("Vec3::normalized: zero vector");
    return {x / n, y / n, z / n};
}

double lorentz_factor(double speed) {
    if (speed < 0.0 || speed >= 1.0)
        throw std::domain_error("lorentz_factor: speed must lie in [0, 1)");
    return 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
}

FourMomentum FourMomentum::on_shell(const Vec3& p, double mass) {
    if (mass <= 0.0) throw std::domain_error("FourMomentum: mass must be positive");
    const double E = std::sqrt(mass * mass + p.dot(p));
    return {E, p.x, p.y, p.z, mass};
}

double FourMomentum::spatial_norm() const {
    return std::sqrt(px * px + py * py + pz * pz);
}

bool FourMomentum::is_on_shell(double rel_tol) const {
    if (m <= 0.0 || E < m) return false;
    const double defect = E * E - (px * px + py * py + pz * pz) - m * m;
    return std::abs(defect) <= rel_tol * E * E;
}

LorentzTransform LorentzTransform::identity() {
    LorentzTransform L;
    for (std::size_t i = 0; i < 4; ++i) L(i, i) = 1.0;
    return L;
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& o) const {
    LorentzTransform out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
            out(r, c) = s;
        }
    return out;
}

LorentzTransform LorentzTransform::transposed() const {
    LorentzTransform out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = (*this)(c, r);
    return out;
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g,
            double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

double LorentzTransform::determinant() const {
    const auto& L = *this;
    double det = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
        std::array<double, 9> minor{};
        std::size_t k = 0;
        for (std::size_t r = 1; r < 4; ++r)
            for (std::size_t cc = 0; cc < 4; ++cc)
                if (cc != c) minor[k++] = L(r, cc);
        const double cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4],
                                minor[5], minor[6], minor[7], minor[8]);
        det += (c % 2 == 0 ? 1.0 : -1.0) * L(0, c) * cof;
    }
    return det;
}

double LorentzTransform::metric_defect() const {
    // eta L, then L^T (eta L), compared against eta
    const auto& L = *this;
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double eta_k = (k == 0) ? 1.0 : -1.0;
                s += L(k, r) * eta_k * L(k, c);
            }
            const double eta_rc = (r == c) ? ((r == 0) ? 1.0 : -1.0) : 0.0;
            worst = std::max(worst, std::abs(s - eta_rc));
        }
    return worst;
}

bool LorentzTransform::is_proper_orthochronous(double tol) const {
    return (*this)(0, 0) >= 1.0 - tol && determinant() > 0.0 && preserves_metric(1e-8);
}

LorentzTransform boost_matrix(const Vec3& velocity) {
    const double v2 = velocity.dot(velocity);
    if (v2 >= 1.0) throw std::domain_error("boost_matrix: |v| must be < 1");
    LorentzTransform L = LorentzTransform::identity();
    if (v2 == 0.0) return L;
    const double g = 1.0 / std::sqrt(1.0 - v2);
    // (g - 1)/v^2 = g^2/(g + 1), stable as v -> 0
    const double k = g * g / (g + 1.0);
    const double v[3] = {velocity.x, velocity.y, velocity.z};
    L(0, 0) = g;
    for (std::size_t i = 0; i < 3; ++i) {
        L(0, i + 1) = L(i + 1, 0) = g * v[i];
        for (std::size_t j = 0; j < 3; ++j)
            L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + k * v[i] * v[j];
    }
    return L;
}

LorentzTransform boost_from_rapidity(double xi, const Vec3& direction) {
    if (std::abs(direction.norm() - 1.0) > 1e-12)
        throw std::domain_error("boost_from_rapidity: direction must be a unit vector");
    const double ch = std::cosh(xi);
    const double sh = std::sinh(xi);
    LorentzTransform L = LorentzTransform::identity();
    const double n[3] = {direction.x, direction.y, direction.z};
    L(0, 0) = ch;
    for (std::size_t i = 0; i < 3; ++i) {
        L(0, i + 1) = L(i + 1, 0) = sh * n[i];
        for (std::size_t j = 0; j < 3; ++j)
            L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
    }
    return L;
}

LorentzTransform rotation_matrix(const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-12)
        throw std::domain_error("rotation_matrix: axis must be a unit vector");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double n[3] = {axis.x, axis.y, axis.z};
    LorentzTransform R = LorentzTransform::identity();
    // Rodrigues: R = c I + s [n]_x + (1-c) n n^T
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            R(i + 1, j + 1) = c * (i == j ? 1.0 : 0.0) + (1.0 - c) * n[i] * n[j];
    R(1, 2) += -s * n[2];
    R(1, 3) += s * n[1];
    R(2, 1) += s * n[2];
    R(2, 3) += -s * n[0];
    R(3, 1) += -s * n[1];
    R(3, 2) += s * n[0];
    return R;
}

LorentzTransform compose(const LorentzTransform& second, const LorentzTransform& first) {
    if (!second.is_proper_orthochronous() || !first.is_proper_orthochronous())
        throw std::domain_error("compose: inputs must be proper orthochronous");
    return second * first;
}

PolarDecomposition polar_decompose(const LorentzTransform& L) {
    if (!L.is_proper_orthochronous())
        throw std::domain_error("polar_decompose: input must be proper orthochronous");
    const Vec3 v{L(1, 0) / L(0, 0), L(2, 0) / L(0, 0), L(3, 0) / L(0, 0)};
    const LorentzTransform rotation = boost_matrix(-v) * L;
    const LorentzTransform boost = rotation.transposed() * L;
    return {rotation, boost};
}

double wigner_angle(const BoostPair& pair) {
    if (pair.v1 < 0.0 || pair.v1 >= 1.0 || pair.v2 < 0.0 || pair.v2 >= 1.0)
        throw std::domain_error("wigner_angle: speeds must lie in [0, 1)");
    if (pair.v1 == 0.0 || pair.v2 == 0.0) return 0.0;  // D diverges, no rotation
    const double g1 = lorentz_factor(pair.v1);
    const double g2 = lorentz_factor(pair.v2);
    const double D = std::sqrt((g1 + 1.0) / (g1 - 1.0) * ((g2 + 1.0) / (g2 - 1.0)));
    return 2.0 * std::atan2(std::sin(pair.theta), std::cos(pair.theta) + D);
}

double wigner_angle_rapidity(double v1, double theta, double xi) {
    if (v1 < 0.0 || v1 >= 1.0)
        throw std::domain_error("wigner_angle_rapidity: v1 must lie in [0, 1)");
    if (xi < 0.0) throw std::domain_error("wigner_angle_rapidity: xi must be >= 0");
    if (v1 == 0.0 || xi == 0.0) return 0.0;
    const double g1 = lorentz_factor(v1);
    const double D = std::sqrt((g1 + 1.0) / (g1 - 1.0)) / std::tanh(0.5 * xi);
    return 2.0 * std::atan2(std::sin(theta), std::cos(theta) + D);
}

Vec3 wigner_axis(const Vec3& v1_dir, const Vec3& v2_dir) {
    if (std::abs(v1_dir.norm() - 1.0) > 1e-12 || std::abs(v2_dir.norm() - 1.0) > 1e-12)
        throw std::domain_error("wigner_axis: directions must be unit vectors");
    const Vec3 n = v2_dir.cross(v1_dir);
    const double len = n.norm();
    if (len < 1e-12)
        throw std::domain_error("wigner_axis: collinear boosts have no rotation axis");
    return {n.x / len, n.y / len, n.z / len};
}

FourMomentum apply(const LorentzTransform& L, const FourMomentum& p) {
    const double in[4] = {p.E, p.px, p.py, p.pz};
    double out[4];
    for (std::size_t r = 0; r < 4; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < 4; ++c) s += L(r, c) * in[c];
        out[r] = s;
    }
    return {out[0], out[1], out[2], out[3], p.m};
}

RotationAngleAxis rotation_angle_axis(const LorentzTransform& R) {
    const Vec3 w{0.5 * (R(3, 2) - R(2, 3)), 0.5 * (R(1, 3) - R(3, 1)),
                 0.5 * (R(2, 1) - R(1, 2))};
    const double s = w.norm();
    const double c = 0.5 * (R(1, 1) + R(2, 2) + R(3, 3) - 1.0);
    RotationAngleAxis out;
    out.angle = std::atan2(s, c);
    if (s < 1e-12) {
        out.degenerate = true;  // identity or half-turn; axis left at default
        return out;
    }
    out.axis = {w.x / s, w.y / s, w.z / s};
    return out;
}

}  // namespace spinboost
