#pragma once

// Spin measurements along arbitrary Bloch directions. In-plane angles live
// in the x-z plane, measured from +z; that is the single-angle family for
// which the joint expectation on the phased singlet reduces to
// -cos(a)cos(b) - sin(a)sin(b)cos(phi).

#include "eprsim/qstate.hpp"

namespace eprsim {

struct NonHermitianExpectation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unit vector on the Bloch sphere.
class MeasurementDirection {
  public:
    // Validates ||n|| = 1 within 1e-12.
    MeasurementDirection(double x, double y, double z);

    // (sin theta, 0, cos theta): angle measured from +z in the x-z plane.
    static MeasurementDirection in_plane(double theta);

    // (sin theta cos azimuth, sin theta sin azimuth, cos theta).
    static MeasurementDirection from_polar(double theta, double azimuth);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    // n . sigma
    CMat2 spin_operator() const;

  private:
    double x_, y_, z_;
};

struct JointExpectation {
    double value;
};

// P_+- = (I +- n.sigma)/2; outcome must be +1 or -1.
CMat2 projector(const MeasurementDirection &dir, int outcome);

// <psi| (a.sigma) (x) (b.sigma) |psi>, evaluated through the dense 4x4
// operator. Throws NonHermitianExpectation if the imaginary residue of the
// raw inner product exceeds 1e-10.
JointExpectation joint_expectation(const PureState2Q &psi, const MeasurementDirection &a,
                                   const MeasurementDirection &b);

// -cos(alpha)cos(beta) - sin(alpha)sin(beta)cos(phi): the closed form of
// the in-plane joint expectation on the singlet with relative phase phi.
double closed_form_e(double alpha, double beta, double phi);

}  // namespace eprsim
