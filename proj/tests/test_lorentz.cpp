#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "spinboost/lorentz.hpp"
#include "test_util.hpp"

using namespace spinboost;
using namespace spinboost::testutil;

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double d) { return d * kPi / 180.0; }

double max_entry_diff(const LorentzTransform& a, const LorentzTransform& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

}  // namespace

TEST_CASE("lorentz_factor matches direct evaluation") {
    CHECK(lorentz_factor(0.0) == 1.0);
    CHECK(lorentz_factor(0.985) == doctest::Approx(5.795275877997447).epsilon(1e-13));
    CHECK(lorentz_factor(0.999) == doctest::Approx(22.36627204212937).epsilon(1e-13));
    CHECK_THROWS_AS(lorentz_factor(1.0), std::domain_error);
    CHECK_THROWS_AS(lorentz_factor(1.5), std::domain_error);
    CHECK_THROWS_AS(lorentz_factor(-0.1), std::domain_error);
}

TEST_CASE("boost_matrix: canonical boost basics") {
    CHECK(max_entry_diff(boost_matrix({0, 0, 0}), LorentzTransform::identity()) == 0.0);

    // rest particle (m = 1) boosted to v = 0.6 z: gamma = 1.25
    const auto p = apply(boost_matrix({0, 0, 0.6}), FourMomentum{1, 0, 0, 0, 1});
    CHECK(p.E == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(p.pz == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.px == 0.0);

    for (int i = 0; i < 20; ++i) {
        const Vec3 v = random_velocity();
        CHECK(max_entry_diff(boost_matrix(v) * boost_matrix(-v),
                             LorentzTransform::identity()) < 1e-10);
    }
    CHECK_THROWS_AS(boost_matrix({0, 0, 1.0}), std::domain_error);
}

TEST_CASE("boost_from_rapidity agrees with boost_matrix") {
    CHECK(max_entry_diff(boost_from_rapidity(0.0, {0, 0, 1}), LorentzTransform::identity()) ==
          0.0);
    CHECK(max_entry_diff(boost_from_rapidity(std::atanh(0.6), {0, 0, 1}),
                         boost_matrix({0, 0, 0.6})) < 1e-12);

    const auto p = apply(boost_from_rapidity(2.4, {0, 0, 1}), FourMomentum{1, 0, 0, 0, 1});
    CHECK(p.E == doctest::Approx(5.556947166965507).epsilon(1e-14));

    CHECK_THROWS_AS(boost_from_rapidity(1.0, {0, 0, 2}), std::domain_error);
}

TEST_CASE("compose: identity, collinear additivity, non-commutativity") {
    const auto L = boost_matrix({0.3, -0.2, 0.5});
    CHECK(max_entry_diff(compose(LorentzTransform::identity(), L), L) == 0.0);

    const auto sum = compose(boost_from_rapidity(0.7, {0, 0, 1}),
                             boost_from_rapidity(1.1, {0, 0, 1}));
    CHECK(max_entry_diff(sum, boost_from_rapidity(1.8, {0, 0, 1})) < 1e-12);

    // non-collinear boosts pick up a rotation, so the product is not symmetric
    const auto xz = compose(boost_matrix({0.6, 0, 0}), boost_matrix({0, 0, 0.7}));
    CHECK(max_entry_diff(xz, xz.transposed()) > 1e-3);
}

TEST_CASE("polar_decompose splits rotation and boost") {
    SUBCASE("pure boost") {
        const auto B = boost_matrix({0.2, 0.4, -0.5});
        const auto [rotation, boost] = polar_decompose(B);
        CHECK(max_entry_diff(rotation, LorentzTransform::identity()) < 1e-12);
        CHECK(max_entry_diff(boost, B) < 1e-12);
    }
    SUBCASE("pure rotation") {
        const auto R = rotation_matrix(Vec3{1, 2, 2}.normalized(), 1.1);
        const auto [rotation, boost] = polar_decompose(R);
        CHECK(max_entry_diff(rotation, R) < 1e-12);
        CHECK(max_entry_diff(boost, LorentzTransform::identity()) < 1e-12);
    }
    SUBCASE("two orthogonal 0.985 boosts give the closed-form angle about y") {
        const auto L = compose(boost_matrix({0.985, 0, 0}), boost_matrix({0, 0, 0.985}));
        const auto [rotation, boost] = polar_decompose(L);
        const auto aa = rotation_angle_axis(rotation);
        // derived by evaluating the half-tangent formula independently
        CHECK(aa.angle == doctest::Approx(1.229052932616477).epsilon(1e-8));
        CHECK(std::abs(aa.axis.y) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(max_entry_diff(rotation * boost, L) < 1e-10);
        CHECK(max_entry_diff(boost, boost.transposed()) < 1e-10);
    }
    SUBCASE("non-orthochronous input rejected") {
        auto T = LorentzTransform::identity();
        T(0, 0) = -1.0;
        T(1, 1) = -1.0;
        CHECK_THROWS_AS(polar_decompose(T), std::domain_error);
    }
}

TEST_CASE("wigner_angle closed form") {
    CHECK(wigner_angle({0.5, 0.7, 0.0}) == 0.0);
    CHECK(wigner_angle({0.0, 0.7, 1.0}) == 0.0);
    CHECK(wigner_angle({0.7, 0.0, 1.0}) == 0.0);

    // v1 = v2 = 0.985, theta = 90 deg: D = (g+1)/(g-1), omega = 2 atan(1/D)
    const double omega = wigner_angle({0.985, 0.985, kPi / 2});
    CHECK(omega == doctest::Approx(1.229052932616477).epsilon(1e-12));
    const double g = lorentz_factor(0.985);
    CHECK((g + 1.0) / (g - 1.0) == doctest::Approx(1.4170771506967434).epsilon(1e-12));

    // both speeds to 1 at theta = 90 deg: D -> 1, omega -> 90 deg
    CHECK(std::abs(wigner_angle({0.99999999, 0.99999999, kPi / 2}) - kPi / 2) < 1e-3);

    // nearly opposite ultrarelativistic boosts: omega approaches 180 deg
    const double near_pi = wigner_angle({1 - 1e-12, 1 - 1e-12, deg2rad(179.9)});
    CHECK(near_pi > deg2rad(179.0));
    CHECK(near_pi < kPi);

    CHECK_THROWS_AS(wigner_angle({1.0, 0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(wigner_angle({0.5, 1.2, 1.0}), std::domain_error);
}

TEST_CASE("wigner_angle_rapidity matches the speed form") {
    for (int i = 0; i < 50; ++i) {
        const double v1 = uniform(0.05, 0.99);
        const double xi = uniform(0.01, 5.0);
        const double theta = uniform(0.01, kPi - 0.01);
        CHECK(wigner_angle_rapidity(v1, theta, xi) ==
              doctest::Approx(wigner_angle({v1, std::tanh(xi), theta})).epsilon(1e-12));
    }
    CHECK(wigner_angle_rapidity(0.9, 1.0, 0.0) == 0.0);
}

TEST_CASE("wigner_axis follows v2 x v1") {
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const Vec3 a = wigner_axis(x, z);
    CHECK(a.x == doctest::Approx(y.x));
    CHECK(a.y == doctest::Approx(y.y));
    CHECK(a.z == doctest::Approx(y.z));
    const Vec3 b = wigner_axis(-x, z);
    CHECK(b.y == doctest::Approx(-1.0));
    CHECK_THROWS_AS(wigner_axis(z, z), std::domain_error);
}

TEST_CASE("apply: boosts act on four-momenta as expected") {
    const FourMomentum p = FourMomentum::on_shell({0.3, -0.1, 1.7}, 1.0);
    const auto same = apply(LorentzTransform::identity(), p);
    CHECK(same.E == p.E);
    CHECK(same.pz == p.pz);

    // z-boost of rapidity xi: E' = E cosh(xi) + pz sinh(xi)
    const double xi = 1.3;
    const auto boosted = apply(boost_from_rapidity(xi, {0, 0, 1}), p);
    CHECK(boosted.E ==
          doctest::Approx(p.E * std::cosh(xi) + p.pz * std::sinh(xi)).epsilon(1e-14));

    for (int i = 0; i < 30; ++i) {
        const auto q = random_on_shell();
        const auto L = boost_matrix(random_velocity()) *
                       rotation_matrix(random_unit_vector(), uniform(0.0, kPi));
        CHECK(apply(L, q).is_on_shell(1e-10));
    }
}

TEST_CASE("property: constructed transforms preserve the metric") {
    for (int i = 0; i < 50; ++i) {
        CHECK(boost_matrix(random_velocity()).preserves_metric(1e-10));
        CHECK(boost_from_rapidity(uniform(0.0, 6.0), random_unit_vector())
                  .preserves_metric(1e-10));
        CHECK(rotation_matrix(random_unit_vector(), uniform(0.0, 2 * kPi))
                  .preserves_metric(1e-10));
    }
}

TEST_CASE("property: polar rotation of composed boosts equals the closed form") {
    for (int i = 0; i < 100; ++i) {
        const double v1 = uniform(0.05, 0.99);
        const double v2 = uniform(0.05, 0.99);
        const double theta = uniform(0.01, kPi - 0.01);
        const Vec3 dir1{std::sin(theta), 0.0, std::cos(theta)};
        const auto L = compose(boost_matrix({0, 0, v2}), boost_matrix(dir1 * v1));
        const auto aa = rotation_angle_axis(polar_decompose(L).rotation);
        CHECK(aa.angle == doctest::Approx(wigner_angle({v1, v2, theta})).epsilon(1e-8));
    }
}

TEST_CASE("property: wigner_angle bounds and monotonicity") {
    for (int i = 0; i < 40; ++i) {
        const double v1 = uniform(0.01, 0.999);
        const double v2 = uniform(0.01, 0.999);
        CHECK(wigner_angle({v1, v2, 0.0}) == 0.0);
        CHECK(wigner_angle({v1, v2, uniform(0.0, kPi)}) < kPi);
    }

    // at fixed theta and v1, omega grows with v2 (FIG-1-style family)
    for (const double theta : {0.3, kPi / 2, 2.8}) {
        double prev = -1.0;
        for (double v2 = 0.1; v2 < 0.995; v2 += 0.05) {
            const double omega = wigner_angle({0.7, v2, theta});
            CHECK(omega > prev);
            prev = omega;
        }
    }

    CHECK(wigner_angle({0.01, 0.01, kPi / 2}) < 1e-3);  // small-boost limit
}
