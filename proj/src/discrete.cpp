#include "spinboost/discrete.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost {

namespace {

const Spinor kSpinUp{complexd{1.0, 0.0}, complexd{0.0, 0.0}};

}  // namespace

DiscreteSpinField two_point_field(double v1, double theta, double mass) {
    const auto [px0, pz0] = momentum_from_scenario(v1, theta, mass);
    DiscreteSpinField field;
    field.entries = {
        {FourMomentum::on_shell({px0, 0.0, pz0}, mass), 0.5, kSpinUp},
        {FourMomentum::on_shell({-px0, 0.0, pz0}, mass), 0.5, kSpinUp},
    };
    return field;
}

DiscreteSpinField four_spin_field(double p1, double p2, double mass) {
    if (p1 <= 0.0) throw std::domain_error("four_spin_field: p1 must be positive");
    if (p2 == 0.0) p2 = 2.0 * p1;
    DiscreteSpinField field;
    for (const double p : {-p2, -p1, p1, p2})
        field.entries.push_back({FourMomentum::on_shell({p, 0.0, 0.0}, mass), 0.25, kSpinUp});
    return field;
}

DensityMatrix discrete_density(const DiscreteSpinField& field, double xi) {
    double weight_sum = 0.0;
    for (const auto& e : field.entries) weight_sum += e.weight;
    if (std::abs(weight_sum - 1.0) > 1e-10)
        throw std::domain_error("discrete_density: weights must sum to 1");

    DensityMatrix rho;
    for (const auto& e : field.entries) {
        const SpinorRotation U = wigner_spinor(xi, e.momentum);
        rho = rho + e.weight * project(U * e.spin);
    }
    return rho;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x must lie in [0, 1]");
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double two_point_entropy(double v1, double theta, double xi) {
    return von_neumann_entropy(discrete_density(two_point_field(v1, theta), xi));
}

double two_point_entropy_closed_form(double v1, double theta, double xi) {
    const double omega = wigner_angle_rapidity(v1, theta, xi);
    return binary_entropy(0.5 * (1.0 + std::abs(std::cos(omega))));
}

double asymptotic_entropy(double v1, double theta) {
    if (v1 <= 0.0 || v1 >= 1.0)
        throw std::domain_error("asymptotic_entropy: v1 must lie in (0, 1)");
    const double g1 = lorentz_factor(v1);
    const double D = std::sqrt((g1 + 1.0) / (g1 - 1.0));
    const double omega = 2.0 * std::atan2(std::sin(theta), std::cos(theta) + D);
    return binary_entropy(0.5 * (1.0 + std::abs(std::cos(omega))));
}

}  // namespace spinboost
