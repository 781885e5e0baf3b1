#pragma once

// Minimal fixed-size complex linear algebra: 2x2 and 4x4 matrices, 2- and
// 4-component vectors, tensor products, a Hermitian eigensolver and a PSD
// matrix square root. Dimensions are fixed at what a two-qubit problem needs.

#include <array>
#include <complex>
#include <stdexcept>

namespace eprsim {

using Complex = std::complex<double>;

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPsd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class CVec2 {
  public:
    CVec2() : e_{} {}
    CVec2(Complex a, Complex b) : e_{a, b} {}

    Complex &operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const Complex &operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

  private:
    std::array<Complex, 2> e_;
};

class CVec4 {
  public:
    CVec4() : e_{} {}
    CVec4(Complex a, Complex b, Complex c, Complex d) : e_{a, b, c, d} {}

    Complex &operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const Complex &operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    double norm() const;
    CVec4 conj() const;

  private:
    std::array<Complex, 4> e_;
};

CVec4 operator+(const CVec4 &a, const CVec4 &b);
CVec4 operator-(const CVec4 &a, const CVec4 &b);
CVec4 operator*(Complex s, const CVec4 &v);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVec4 &a, const CVec4 &b);

class CMat2 {
  public:
    CMat2() : e_{} {}
    CMat2(Complex a00, Complex a01, Complex a10, Complex a11) : e_{a00, a01, a10, a11} {}

    static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex &operator()(int i, int j) { return e_[static_cast<std::size_t>(2 * i + j)]; }
    const Complex &operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(2 * i + j)];
    }

    CMat2 adjoint() const;
    Complex trace() const { return e_[0] + e_[3]; }

  private:
    std::array<Complex, 4> e_;
};

CMat2 operator+(const CMat2 &a, const CMat2 &b);
CMat2 operator-(const CMat2 &a, const CMat2 &b);
CMat2 operator*(const CMat2 &a, const CMat2 &b);
CMat2 operator*(Complex s, const CMat2 &m);

class CMat4 {
  public:
    CMat4() : e_{} {}
    explicit CMat4(const std::array<Complex, 16> &entries) : e_(entries) {}

    static CMat4 identity();

    Complex &operator()(int i, int j) { return e_[static_cast<std::size_t>(4 * i + j)]; }
    const Complex &operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(4 * i + j)];
    }

    CMat4 adjoint() const;
    Complex trace() const;
    CMat4 conj() const;

  private:
    std::array<Complex, 16> e_;
};

CMat4 operator+(const CMat4 &a, const CMat4 &b);
CMat4 operator-(const CMat4 &a, const CMat4 &b);
CMat4 operator*(const CMat4 &a, const CMat4 &b);
CMat4 operator*(Complex s, const CMat4 &m);
CVec4 operator*(const CMat4 &m, const CVec4 &v);

// Largest entrywise |a - b|.
double max_abs_diff(const CMat4 &a, const CMat4 &b);
double max_abs_diff(const CVec4 &a, const CVec4 &b);

// |a><b|
CMat4 outer_product(const CVec4 &a, const CVec4 &b);

// (a (x) b)[2i+k][2j+l] = a[i][j] * b[k][l]
CMat4 tensor_product(const CMat2 &a, const CMat2 &b);

// (u (x) v)[2i+k] = u[i] * v[k]
CVec4 tensor_product_vec(const CVec2 &u, const CVec2 &v);

struct HermitianEigen {
    std::array<double, 4> values;  // descending
    std::array<CVec4, 4> vectors;  // orthonormal, matching order
};

// Eigendecomposition of a Hermitian 4x4 matrix by cyclic complex Jacobi
// rotations, iterated until the off-diagonal Frobenius norm drops below
// 1e-13 (at most 100 sweeps). Eigenvalues come out sorted descending and
// each eigenvector is gauge-fixed so that its first nonzero component is
// real and positive.
//
// Throws NotHermitian when max |h - h^dagger| exceeds 1e-10.
HermitianEigen hermitian_eigen(const CMat4 &h);

// Hermitian PSD square root: R with R*R = m. Eigenvalues in [-1e-10, 0)
// are treated as rounding noise and clamped to zero; anything below
// -1e-10 throws NotPsd.
CMat4 psd_sqrt(const CMat4 &m);

}  // namespace eprsim
