#include "eprsim/phases.hpp"

#include <cmath>
#include <numbers>

namespace eprsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double v, const char *name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("phase setup: non-finite ") + name);
    }
}

// Phase angles acquired by spin-up on the left and right arm; spin-down
// acquires the opposite sign.
struct ArmPhases {
    double left;
    double right;
};

ArmPhases arm_phases(const PhaseSetup &setup) {
    return std::visit(
        [](const auto &s) -> ArmPhases {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AcSetup>) {
                return {s.mu * s.lambda1, s.mu * s.lambda2};
            } else if constexpr (std::is_same_v<T, HmwSetup>) {
                return {s.d * s.lambda_b, 0.0};
            } else if constexpr (std::is_same_v<T, BerrySetup>) {
                return {s.gamma, 0.0};
            } else {
                return {0.0, 0.0};
            }
        },
        setup);
}

// AB and DAB act only through a global factor.
double global_only_phase(const PhaseSetup &setup) {
    if (const auto *ab = std::get_if<AbSetup>(&setup)) return -ab->phi_b;
    if (const auto *dab = std::get_if<DabSetup>(&setup)) return -dab->g * dab->phi_e;
    return 0.0;
}

}  // namespace

std::string_view setup_kind(const PhaseSetup &setup) {
    switch (setup.index()) {
        case 0: return "ab";
        case 1: return "ac";
        case 2: return "hmw";
        case 3: return "berry";
        default: return "dab";
    }
}

void validate_setup(const PhaseSetup &setup) {
    std::visit(
        [](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbSetup>) {
                require_finite(s.phi_b, "phi_b");
            } else if constexpr (std::is_same_v<T, AcSetup>) {
                require_finite(s.mu, "mu");
                require_finite(s.lambda1, "lambda1");
                require_finite(s.lambda2, "lambda2");
            } else if constexpr (std::is_same_v<T, HmwSetup>) {
                require_finite(s.d, "d");
                require_finite(s.lambda_b, "lambda_b");
            } else if constexpr (std::is_same_v<T, BerrySetup>) {
                require_finite(s.gamma, "gamma");
            } else {
                require_finite(s.g, "g");
                require_finite(s.phi_e, "phi_e");
            }
        },
        setup);
}

double wrap_angle(double x) {
    double y = std::remainder(x, kTwoPi);  // [-pi, pi]
    if (y <= -std::numbers::pi) y += kTwoPi;
    return y;
}

PureState2Q apply_phase(const PureState2Q &psi, const PhaseSetup &setup) {
    validate_setup(setup);

    CVec4 amp = psi.amplitudes();
    if (std::holds_alternative<AbSetup>(setup) || std::holds_alternative<DabSetup>(setup)) {
        const Complex factor = std::polar(1.0, global_only_phase(setup));
        for (int i = 0; i < 4; ++i) amp[i] *= factor;
        return PureState2Q(amp);
    }

    const ArmPhases arms = arm_phases(setup);
    for (int l = 0; l < 2; ++l) {
        const double sl = (l == 0) ? -1.0 : 1.0;
        for (int r = 0; r < 2; ++r) {
            const double sr = (r == 0) ? -1.0 : 1.0;
            amp[2 * l + r] *= std::polar(1.0, sl * arms.left + sr * arms.right);
        }
    }
    return PureState2Q(amp);
}

PhaseDecomposition decompose(const PhaseSetup &setup) {
    validate_setup(setup);
    if (std::holds_alternative<AbSetup>(setup) || std::holds_alternative<DabSetup>(setup)) {
        return {global_only_phase(setup), 0.0};
    }
    const ArmPhases arms = arm_phases(setup);
    const double theta = arms.left - arms.right;  // mu*lambda_E, d*lambda_B or gamma
    return {-theta, wrap_angle(2.0 * theta)};
}

bool phase_equivalent(const PureState2Q &a, const PureState2Q &b) {
    return std::abs(inner(a.amplitudes(), b.amplitudes())) >= 1.0 - 1e-10;
}

}  // namespace eprsim
