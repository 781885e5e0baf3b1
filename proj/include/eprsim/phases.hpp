#pragma once

// Geometric-phase application for the five hybrid interferometer setups:
// Aharonov-Bohm (AB), Aharonov-Casher (AC), He-McKellar-Wilkens (HMW),
// Berry, and dual Aharonov-Bohm (DAB). AB and DAB imprint only a global
// phase; AC, HMW and Berry imprint per-arm phases whose difference shows up
// as a relative phase on the |du> branch.

#include <string_view>
#include <variant>

#include "eprsim/qstate.hpp"

namespace eprsim {

struct AbSetup {
    double phi_b = 0.0;  // magnetic-flux phase, radians
};

struct AcSetup {
    double mu = 0.0;       // magnetic dipole
    double lambda1 = 0.0;  // electric line-charge density, left arm
    double lambda2 = 0.0;  // electric line-charge density, right arm

    double lambda_e() const { return lambda1 - lambda2; }
};

struct HmwSetup {
    double d = 0.0;         // electric dipole
    double lambda_b = 0.0;  // magnetic line-charge density
};

struct BerrySetup {
    double gamma = 0.0;  // radians
};

struct DabSetup {
    double g = 0.0;      // magnetic charge
    double phi_e = 0.0;  // electric-flux phase per unit g, radians
};

using PhaseSetup = std::variant<AbSetup, AcSetup, HmwSetup, BerrySetup, DabSetup>;

// "ab", "ac", "hmw", "berry" or "dab".
std::string_view setup_kind(const PhaseSetup &setup);

// Throws std::invalid_argument if any parameter is non-finite.
void validate_setup(const PhaseSetup &setup);

struct PhaseDecomposition {
    double global_phase;    // radians, unwrapped
    double relative_phase;  // radians, wrapped to (-pi, pi]
};

// Wrap an angle to (-pi, pi].
double wrap_angle(double x);

// Multiply the state's amplitudes by the setup's per-arm phase factors.
// Spin-up on an arm acquires e^{-i theta}, spin-down e^{+i theta}, with
// theta = mu*lambda1 / mu*lambda2 on the left/right arm for AC, d*lambda_b
// (left arm) for HMW and gamma (left arm) for Berry. AB and DAB multiply
// the whole state by e^{-i phi_b} / e^{-i g phi_e}. Norm-preserving.
PureState2Q apply_phase(const PureState2Q &psi, const PhaseSetup &setup);

// Global/relative phase split of the state apply_phase produces from the
// singlet: (1/sqrt 2)(|ud> - e^{i rel}|du>) times e^{i global}.
PhaseDecomposition decompose(const PhaseSetup &setup);

// True iff a and b coincide up to a global phase: |<a|b>| >= 1 - 1e-10.
bool phase_equivalent(const PureState2Q &a, const PureState2Q &b);

}  // namespace eprsim
