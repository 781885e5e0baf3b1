#include "eprsim/measurement.hpp"

#include <cmath>

namespace eprsim {

MeasurementDirection::MeasurementDirection(double x, double y, double z) : x_(x), y_(y), z_(z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw std::invalid_argument("MeasurementDirection: non-finite component");
    }
    const double n = std::sqrt(x * x + y * y + z * z);
    if (std::abs(n - 1.0) > 1e-12) {
        throw std::invalid_argument("MeasurementDirection: not a unit vector");
    }
}

MeasurementDirection MeasurementDirection::in_plane(double theta) {
    return {std::sin(theta), 0.0, std::cos(theta)};
}

MeasurementDirection MeasurementDirection::from_polar(double theta, double azimuth) {
    const double st = std::sin(theta);
    return {st * std::cos(azimuth), st * std::sin(azimuth), std::cos(theta)};
}

CMat2 MeasurementDirection::spin_operator() const {
    return Complex(x_) * pauli::x() + Complex(y_) * pauli::y() + Complex(z_) * pauli::z();
}

CMat2 projector(const MeasurementDirection &dir, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("projector: outcome must be +1 or -1");
    }
    return Complex(0.5) * (CMat2::identity() + Complex(static_cast<double>(outcome)) *
                                                   dir.spin_operator());
}

JointExpectation joint_expectation(const PureState2Q &psi, const MeasurementDirection &a,
                                   const MeasurementDirection &b) {
    const CMat4 op = tensor_product(a.spin_operator(), b.spin_operator());
    const Complex raw = inner(psi.amplitudes(), op * psi.amplitudes());
    if (std::abs(raw.imag()) > 1e-10) {
        throw NonHermitianExpectation("joint_expectation: imaginary residue above 1e-10");
    }
    const double value = raw.real();
    if (std::abs(value) > 1.0 + 1e-10) {
        throw NonHermitianExpectation("joint_expectation: |E| above 1 beyond tolerance");
    }
    return {value};
}

double closed_form_e(double alpha, double beta, double phi) {
    return -std::cos(alpha) * std::cos(beta) - std::sin(alpha) * std::sin(beta) * std::cos(phi);
}

}  // namespace eprsim
