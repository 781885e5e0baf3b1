#include "eprsim/qstate.hpp"

#include <cmath>

namespace eprsim {

namespace pauli {

const CMat2 &x() {
    static const CMat2 m{0.0, 1.0, 1.0, 0.0};
    return m;
}

const CMat2 &y() {
    static const CMat2 m{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
    return m;
}

const CMat2 &z() {
    static const CMat2 m{1.0, 0.0, 0.0, -1.0};
    return m;
}

const CMat2 &id() {
    static const CMat2 m = CMat2::identity();
    return m;
}

}  // namespace pauli

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

PureState2Q::PureState2Q(const CVec4 &amplitudes) : amp_(amplitudes) {
    double norm_sq = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (!finite(amp_[i])) {
            throw std::invalid_argument("PureState2Q: non-finite amplitude");
        }
        norm_sq += std::norm(amp_[i]);
    }
    if (std::abs(norm_sq - 1.0) > 1e-12) {
        throw std::invalid_argument("PureState2Q: amplitudes are not normalized");
    }
}

DensityMatrix4::DensityMatrix4(const CMat4 &matrix) : mat_(matrix) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!finite(mat_(i, j))) {
                throw std::invalid_argument("DensityMatrix4: non-finite entry");
            }
    if (max_abs_diff(mat_, mat_.adjoint()) > 1e-12) {
        throw std::invalid_argument("DensityMatrix4: not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0)) > 1e-12) {
        throw std::invalid_argument("DensityMatrix4: trace is not 1");
    }
    const HermitianEigen eig = hermitian_eigen(mat_);
    for (double lambda : eig.values) {
        if (lambda < -1e-10) {
            throw std::invalid_argument("DensityMatrix4: negative eigenvalue");
        }
    }
}

PureState2Q singlet() {
    const double a = 1.0 / std::sqrt(2.0);
    return PureState2Q(CVec4{0.0, a, -a, 0.0});
}

DensityMatrix4 density_from_pure(const PureState2Q &psi) {
    return DensityMatrix4(outer_product(psi.amplitudes(), psi.amplitudes()));
}

SchmidtCoefficients schmidt_coefficients(const PureState2Q &psi) {
    // Singular values of M[l][r] = amp[2l+r] via the 2x2 Hermitian M^dagger M,
    // whose eigenvalues have a closed form.
    const CVec4 &a = psi.amplitudes();
    const Complex m00 = a[0], m01 = a[1], m10 = a[2], m11 = a[3];

    const double tr = std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11);
    const double det_sq = std::norm(m00 * m11 - m01 * m10);  // |det M|^2

    double disc = tr * tr - 4.0 * det_sq;
    if (disc < 0.0) disc = 0.0;  // rounding
    const double root = std::sqrt(disc);
    double l1 = 0.5 * (tr + root);
    double l2 = 0.5 * (tr - root);
    if (l1 < 0.0) l1 = 0.0;
    if (l2 < 0.0) l2 = 0.0;
    return {std::sqrt(l1), std::sqrt(l2)};
}

}  // namespace eprsim
