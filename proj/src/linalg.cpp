#include "eprsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eprsim {

double CVec4::norm() const {
    double s = 0.0;
    for (const auto &c : e_) s += std::norm(c);
    return std::sqrt(s);
}

CVec4 CVec4::conj() const {
    return {std::conj(e_[0]), std::conj(e_[1]), std::conj(e_[2]), std::conj(e_[3])};
}

CVec4 operator+(const CVec4 &a, const CVec4 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

CVec4 operator-(const CVec4 &a, const CVec4 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

CVec4 operator*(Complex s, const CVec4 &v) {
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
}

Complex inner(const CVec4 &a, const CVec4 &b) {
    Complex s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

CMat2 CMat2::adjoint() const {
    return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

CMat2 operator+(const CMat2 &a, const CMat2 &b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

CMat2 operator-(const CMat2 &a, const CMat2 &b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

CMat2 operator*(const CMat2 &a, const CMat2 &b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

CMat2 operator*(Complex s, const CMat2 &m) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = s * m(i, j);
    return r;
}

CMat4 CMat4::identity() {
    CMat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

CMat4 CMat4::adjoint() const {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Complex CMat4::trace() const {
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

CMat4 CMat4::conj() const {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

CMat4 operator+(const CMat4 &a, const CMat4 &b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

CMat4 operator-(const CMat4 &a, const CMat4 &b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

CMat4 operator*(const CMat4 &a, const CMat4 &b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

CMat4 operator*(Complex s, const CMat4 &m) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * m(i, j);
    return r;
}

CVec4 operator*(const CMat4 &m, const CVec4 &v) {
    CVec4 r;
    for (int i = 0; i < 4; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

double max_abs_diff(const CMat4 &a, const CMat4 &b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double max_abs_diff(const CVec4 &a, const CVec4 &b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

CMat4 outer_product(const CVec4 &a, const CVec4 &b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a[i] * std::conj(b[j]);
    return r;
}

CMat4 tensor_product(const CMat2 &a, const CMat2 &b) {
    CMat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

CVec4 tensor_product_vec(const CVec2 &u, const CVec2 &v) {
    CVec4 r;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) r[2 * i + k] = u[i] * v[k];
    return r;
}

namespace {

double off_diagonal_frobenius(const CMat4 &a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation J acts on the
// (p,q) plane as [[c, -s*e^{i*beta}], [s*e^{-i*beta}, c]] with beta the
// argument of a(p,q); a <- J^dagger a J, v <- v J.
void jacobi_rotate(CMat4 &a, CMat4 &v, int p, int q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const Complex phase = apq / mag;  // e^{i*beta}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (app - aqq) / (2.0 * mag);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex jpq = -s * phase;
    const Complex jqp = s * std::conj(phase);

    // a <- a J (columns p and q)
    for (int i = 0; i < 4; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip + jqp * aiq;
        a(i, q) = jpq * aip + c * aiq;
    }
    // a <- J^dagger a (rows p and q)
    for (int j = 0; j < 4; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj + std::conj(jqp) * aqj;
        a(q, j) = std::conj(jpq) * apj + c * aqj;
    }
    // v <- v J
    for (int i = 0; i < 4; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip + jqp * viq;
        v(i, q) = jpq * vip + c * viq;
    }
}

}  // namespace

HermitianEigen hermitian_eigen(const CMat4 &h) {
    if (max_abs_diff(h, h.adjoint()) > 1e-10) {
        throw NotHermitian("hermitian_eigen: input is not Hermitian");
    }

    // Symmetrize so the iteration sees an exactly Hermitian matrix.
    CMat4 a = Complex(0.5) * (h + h.adjoint());
    CMat4 v = CMat4::identity();

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_frobenius(a) < 1e-13) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out;
    for (int k = 0; k < 4; ++k) {
        const int c = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = a(c, c).real();
        CVec4 vec{v(0, c), v(1, c), v(2, c), v(3, c)};
        // Gauge: first nonzero component made real-positive.
        for (int i = 0; i < 4; ++i) {
            const double m = std::abs(vec[i]);
            if (m > 1e-10) {
                vec = (std::conj(vec[i]) / m) * vec;
                break;
            }
        }
        out.vectors[static_cast<std::size_t>(k)] = vec;
    }
    return out;
}

CMat4 psd_sqrt(const CMat4 &m) {
    const HermitianEigen eig = hermitian_eigen(m);
    // Eigenvalues within rounding noise of zero are dropped rather than
    // square-rooted: sqrt(1e-16) = 1e-8 junk would otherwise leak into the
    // result for rank-deficient input (a projector must come back as itself).
    const double floor = std::max(0.0, eig.values[0]) * 1e-13;
    CMat4 r;
    for (int k = 0; k < 4; ++k) {
        const double lambda = eig.values[static_cast<std::size_t>(k)];
        if (lambda < -1e-10) {
            throw NotPsd("psd_sqrt: eigenvalue below -1e-10");
        }
        if (lambda <= floor) continue;
        const auto &vec = eig.vectors[static_cast<std::size_t>(k)];
        r = r + Complex(std::sqrt(lambda)) * outer_product(vec, vec);
    }
    return r;
}

}  // namespace eprsim
