#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "spinboost/discrete.hpp"
#include "test_util.hpp"

using namespace spinboost;
using namespace spinboost::testutil;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTheta161 = 161.0 * kPi / 180.0;

// rapidity at which the two-point Wigner angle crosses 90 degrees
double solve_quarter_turn(double v1, double theta) {
    double lo = 1e-6, hi = 20.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (wigner_angle_rapidity(v1, theta, mid) < kPi / 2 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("discrete_density: degenerate fields stay pure") {
    DiscreteSpinField single;
    single.entries = {{FourMomentum::on_shell({1.3, 0.2, -0.4}, 1.0), 1.0,
                       Spinor{complexd{1, 0}, complexd{0, 0}}}};
    for (const double xi : {0.0, 1.0, 4.0})
        CHECK(von_neumann_entropy(discrete_density(single, xi)) < 1e-12);

    // xi = 0: no rotation, identical spinors remain a product
    const auto field = four_spin_field(0.8);
    CHECK(von_neumann_entropy(discrete_density(field, 0.0)) < 1e-12);
}

TEST_CASE("discrete_density validates the weights") {
    DiscreteSpinField bad;
    bad.entries = {{FourMomentum::on_shell({1, 0, 0}, 1.0), 0.3,
                    Spinor{complexd{1, 0}, complexd{0, 0}}},
                   {FourMomentum::on_shell({-1, 0, 0}, 1.0), 0.3,
                    Spinor{complexd{1, 0}, complexd{0, 0}}}};
    CHECK_THROWS_AS(discrete_density(bad, 1.0), std::domain_error);
}

TEST_CASE("four-spin field: pairwise y-rotations cancel into a z Bloch vector") {
    const double p1 = 0.9, xi = 1.7;
    const auto field = four_spin_field(p1);  // radii p1 and 2 p1 along x
    const auto rho = discrete_density(field, xi);

    const auto omega_at = [xi](double p) {
        const FourMomentum q = FourMomentum::on_shell({p, 0, 0}, 1.0);
        return wigner_angle({q.speed(), std::tanh(xi), kPi / 2});
    };
    const Vec3 n = bloch_vector(rho);
    CHECK(std::abs(n.x) < 1e-12);
    CHECK(std::abs(n.y) < 1e-12);
    CHECK(n.z == doctest::Approx(0.5 * std::cos(omega_at(p1)) +
                                 0.5 * std::cos(omega_at(2 * p1)))
                     .epsilon(1e-10));
}

TEST_CASE("two_point_entropy basics and frozen values") {
    CHECK(two_point_entropy(0.5, 1.0, 0.0) < 1e-12);

    // v1 = v2 = 0.985 at 90 degrees: omega = 70.4195 deg, H2 evaluated
    // with an independent script
    const double S = two_point_entropy(0.985, kPi / 2, std::atanh(0.985));
    CHECK(S == doctest::Approx(0.9173947906917881).epsilon(1e-9));
}

TEST_CASE("two_point_entropy: matrix route equals the closed form") {
    for (int i = 0; i < 80; ++i) {
        const double v1 = uniform(0.05, 0.999);
        const double theta = uniform(0.05, kPi - 0.05);
        const double xi = uniform(0.0, 10.0);
        CHECK(std::abs(two_point_entropy(v1, theta, xi) -
                       two_point_entropy_closed_form(v1, theta, xi)) < 1e-10);
    }
}

TEST_CASE("over-rotation: entropy peaks at the quarter turn, then declines") {
    const double v1 = 0.999;
    const double xi_star = solve_quarter_turn(v1, kTheta161);
    CHECK(xi_star > 2.2);
    CHECK(xi_star < 2.6);  // the quarter turn sits near rapidity 2.3

    CHECK(two_point_entropy(v1, kTheta161, xi_star) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(two_point_entropy(v1, kTheta161, 2.4) > 0.99);

    // rising branch, falling branch, and a sub-maximal large-boost limit
    CHECK(two_point_entropy(v1, kTheta161, 1.0) <
          two_point_entropy(v1, kTheta161, 2.0));
    CHECK(two_point_entropy(v1, kTheta161, 4.0) >
          two_point_entropy(v1, kTheta161, 6.0));
    const double limit = asymptotic_entropy(v1, kTheta161);
    CHECK(limit < 1.0);
    CHECK(two_point_entropy(v1, kTheta161, 30.0) == doctest::Approx(limit).epsilon(1e-6));
}

TEST_CASE("joint limit: opposite ultrarelativistic boosts disentangle") {
    // theta -> 180 deg with both speeds -> 1 drives the rotation to a half
    // turn, so the two lobes realign and the entropy vanishes
    CHECK(two_point_entropy(0.999999999, 179.9 * kPi / 180.0, 14.0) < 0.05);
}

TEST_CASE("asymptotic_entropy limits and ordering") {
    CHECK(asymptotic_entropy(0.9999999, kPi / 2) > 1.0 - 1e-5);
    CHECK(asymptotic_entropy(0.001, kPi / 2) < 1e-3);

    // larger boost angle (up to 90 deg) saturates higher at fixed v1
    double prev = -1.0;
    for (const double theta_deg : {15.0, 30.0, 45.0, 60.0, 75.0, 90.0}) {
        const double S = asymptotic_entropy(0.985, theta_deg * kPi / 180.0);
        CHECK(S > prev);
        prev = S;
    }

    CHECK_THROWS_AS(asymptotic_entropy(1.0, 1.0), std::domain_error);
}

TEST_CASE("property: projector sums are linear in the field") {
    DiscreteSpinField a, b;
    for (int i = 0; i < 2; ++i)
        a.entries.push_back({random_on_shell(3.0), 0.5,
                             Spinor{complexd{1, 0}, complexd{0, 0}}});
    const double wb[3] = {0.2, 0.3, 0.5};
    for (int i = 0; i < 3; ++i) {
        const Vec3 dir = random_unit_vector();
        b.entries.push_back({random_on_shell(3.0), wb[i],
                             Spinor{complexd{dir.z, 0},
                                    complexd{dir.x, dir.y}}});
    }
    for (auto& e : b.entries) {  // normalize the made-up spinors
        const double n = e.spin.norm();
        e.spin.up /= n;
        e.spin.down /= n;
    }

    const double lambda = 0.37;
    DiscreteSpinField merged;
    for (const auto& e : a.entries)
        merged.entries.push_back({e.momentum, lambda * e.weight, e.spin});
    for (const auto& e : b.entries)
        merged.entries.push_back({e.momentum, (1.0 - lambda) * e.weight, e.spin});

    const double xi = 2.2;
    const auto direct = discrete_density(merged, xi);
    const auto combo =
        lambda * discrete_density(a, xi) + (1.0 - lambda) * discrete_density(b, xi);
    CHECK(std::abs(direct.r00 - combo.r00) < 1e-14);
    CHECK(std::abs(direct.r01 - combo.r01) < 1e-14);
    CHECK(std::abs(direct.r10 - combo.r10) < 1e-14);
    CHECK(std::abs(direct.r11 - combo.r11) < 1e-14);
}
