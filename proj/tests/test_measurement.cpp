#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "eprsim/measurement.hpp"
#include "eprsim/phases.hpp"
#include "test_support.hpp"

using eprsim::Complex;
using eprsim::MeasurementDirection;
using eprsim::PureState2Q;
using test_support::kPi;

TEST_CASE("measurement directions validate and expose components") {
    CHECK_THROWS_AS(MeasurementDirection(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MeasurementDirection(0.0, 0.0, 0.0), std::invalid_argument);

    const MeasurementDirection z = MeasurementDirection::in_plane(0.0);
    CHECK(z.x() == 0.0);
    CHECK(z.z() == 1.0);

    const MeasurementDirection tilted = MeasurementDirection::in_plane(0.3);
    CHECK(tilted.x() == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
    CHECK(tilted.y() == 0.0);
    CHECK(tilted.z() == doctest::Approx(std::cos(0.3)).epsilon(1e-15));

    const MeasurementDirection polar = MeasurementDirection::from_polar(0.4, 0.9);
    CHECK(polar.x() == doctest::Approx(std::sin(0.4) * std::cos(0.9)).epsilon(1e-15));
    CHECK(polar.y() == doctest::Approx(std::sin(0.4) * std::sin(0.9)).epsilon(1e-15));
    CHECK(polar.z() == doctest::Approx(std::cos(0.4)).epsilon(1e-15));
}

TEST_CASE("projectors along named axes") {
    const eprsim::CMat2 z_plus = eprsim::projector(MeasurementDirection::in_plane(0.0), 1);
    CHECK(std::abs(z_plus(0, 0) - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(z_plus(0, 1)) <= 1e-15);
    CHECK(std::abs(z_plus(1, 0)) <= 1e-15);
    CHECK(std::abs(z_plus(1, 1)) <= 1e-15);

    const eprsim::CMat2 x_plus =
        eprsim::projector(MeasurementDirection::in_plane(kPi / 2.0), 1);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(x_plus(i, j) - Complex(0.5)) <= 1e-15);
        }
    }

    CHECK_THROWS_AS(eprsim::projector(MeasurementDirection::in_plane(0.0), 2),
                    std::invalid_argument);
}

TEST_CASE("projector completeness, orthogonality, idempotence") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const MeasurementDirection dir = test_support::random_direction(rng);
        const eprsim::CMat2 plus = eprsim::projector(dir, 1);
        const eprsim::CMat2 minus = eprsim::projector(dir, -1);

        auto near2 = [](const eprsim::CMat2 &a, const eprsim::CMat2 &b, double tol) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    if (std::abs(a(i, j) - b(i, j)) > tol) return false;
                }
            }
            return true;
        };
        CHECK(near2(plus + minus, eprsim::CMat2::identity(), 1e-14));
        eprsim::CMat2 zero;
        CHECK(near2(plus * minus, zero, 1e-14));
        CHECK(near2(plus * plus, plus, 1e-14));
        CHECK(near2(plus, plus.adjoint(), 1e-14));
        CHECK(std::abs(plus.trace() - Complex(1.0)) <= 1e-14);
    }
}

TEST_CASE("joint expectation on the singlet anticorrelates every axis") {
    const PureState2Q s = eprsim::singlet();
    const MeasurementDirection z = MeasurementDirection::in_plane(0.0);
    CHECK(eprsim::joint_expectation(s, z, z).value ==
          doctest::Approx(-1.0).epsilon(1e-12));

    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const MeasurementDirection a = test_support::random_direction(rng);
        const MeasurementDirection b = test_support::random_direction(rng);
        const double dot = a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
        CHECK(std::abs(eprsim::joint_expectation(s, a, b).value + dot) <= 1e-12);
    }
}

TEST_CASE("closed form agrees with the operator path on phased states") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const double alpha = test_support::random_angle(rng);
        const double beta = test_support::random_angle(rng);
        const double phi = test_support::random_angle(rng);
        const PureState2Q psi = test_support::phased_state(phi);
        const double operator_value =
            eprsim::joint_expectation(psi, MeasurementDirection::in_plane(alpha),
                                      MeasurementDirection::in_plane(beta))
                .value;
        CHECK(std::abs(operator_value - eprsim::closed_form_e(alpha, beta, phi)) <= 1e-12);
    }
}

TEST_CASE("cross-axis expectation pins the sign of the phase") {
    std::mt19937_64 rng(24);
    const MeasurementDirection x = MeasurementDirection::from_polar(kPi / 2.0, 0.0);
    const MeasurementDirection y = MeasurementDirection::from_polar(kPi / 2.0, kPi / 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double phi = test_support::random_angle(rng);
        const PureState2Q psi = test_support::phased_state(phi);
        CHECK(std::abs(eprsim::joint_expectation(psi, x, y).value - std::sin(phi)) <=
              1e-12);
    }
}

TEST_CASE("closed_form_e special angles") {
    CHECK(eprsim::closed_form_e(0.0, 0.0, 1.7) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(eprsim::closed_form_e(kPi / 2.0, kPi / 2.0, 0.9) ==
          doctest::Approx(-std::cos(0.9)).epsilon(1e-12));

    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = test_support::random_angle(rng);
        const double beta = test_support::random_angle(rng);
        CHECK(std::abs(eprsim::closed_form_e(alpha, beta, 0.0) + std::cos(alpha - beta)) <=
              1e-12);
    }
}

TEST_CASE("expectations are bounded and global-phase invariant") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        const PureState2Q psi = eprsim::random_pure_state(4000 + static_cast<std::uint64_t>(trial));
        const MeasurementDirection a = test_support::random_direction(rng);
        const MeasurementDirection b = test_support::random_direction(rng);
        const double e = eprsim::joint_expectation(psi, a, b).value;
        CHECK(std::abs(e) <= 1.0 + 1e-10);

        const Complex phase = std::polar(1.0, test_support::random_angle(rng));
        const PureState2Q rotated(phase * psi.amplitudes());
        CHECK(std::abs(eprsim::joint_expectation(rotated, a, b).value - e) <= 1e-12);
    }
}
