#pragma once

// Two-qubit pure states and density matrices over the ordered basis
// (|uu>, |ud>, |du>, |dd>), basis index b = 2*left + right with up = 0 and
// down = 1 (left particle is the high bit). Up/down are sigma_z eigenstates.

#include "eprsim/linalg.hpp"

namespace eprsim {

namespace pauli {
const CMat2 &x();
const CMat2 &y();
const CMat2 &z();
const CMat2 &id();
}  // namespace pauli

// Normalized 4-component amplitude vector. Construction rejects
// denormalized or non-finite input instead of renormalizing it.
class PureState2Q {
  public:
    explicit PureState2Q(const CVec4 &amplitudes);

    const CVec4 &amplitudes() const { return amp_; }
    Complex amplitude(int basis) const { return amp_[basis]; }

  private:
    CVec4 amp_;
};

// 4x4 Hermitian, unit-trace, positive-semidefinite matrix. Construction
// validates all three properties.
class DensityMatrix4 {
  public:
    explicit DensityMatrix4(const CMat4 &matrix);

    const CMat4 &matrix() const { return mat_; }

  private:
    CMat4 mat_;
};

// The spin singlet (|ud> - |du>)/sqrt(2).
PureState2Q singlet();

// Rank-1 projector |psi><psi|.
DensityMatrix4 density_from_pure(const PureState2Q &psi);

struct SchmidtCoefficients {
    double s1;  // larger
    double s2;
};

// Singular values of the 2x2 amplitude matrix M[l][r] = amp[2l+r].
// s1^2 + s2^2 = 1; s2 vanishes exactly for product states.
SchmidtCoefficients schmidt_coefficients(const PureState2Q &psi);

}  // namespace eprsim
