#pragma once

// Entanglement and distance measures: spin-flip concurrence for pure and
// mixed states, entanglement of formation, quantum fidelity (pure overlap
// and the general mixed-state form) and the Bures distance. Fidelity uses
// the amplitude convention F = |<a|b>|, so D_B = sqrt(2(1 - F)).

#include "eprsim/phases.hpp"
#include "eprsim/qstate.hpp"

namespace eprsim {

struct Concurrence {
    double value;  // in [0, 1 + 1e-12]
};

struct Fidelity {
    double value;  // in [0, 1 + 1e-12]
};

// (sigma_y (x) sigma_y) |psi*>.
PureState2Q spin_flip(const PureState2Q &psi);

// |<psi|spin_flip(psi)>|.
Concurrence concurrence_pure(const PureState2Q &psi);

// Wootters concurrence max(0, l1 - l2 - l3 - l4), with l_i the descending
// square roots of the eigenvalues of rho * rho~. Computed as the singular
// values of A^T (Y(x)Y) A where rho = A A^dagger, which has the same
// nonzero spectrum squared; working on the factor avoids square roots of
// near-zero eigenvalues, so rank-deficient input keeps exact zero l_i.
Concurrence concurrence_mixed(const DensityMatrix4 &rho);

// -x log2 x - (1-x) log2(1-x), extended by h(0) = h(1) = 0. Throws
// std::domain_error outside [0, 1].
double binary_entropy(double x);

// h((1 + sqrt(1 - c^2)) / 2).
double eof_from_concurrence(const Concurrence &c);

// |<a|b>|.
Fidelity fidelity_pure(const PureState2Q &a, const PureState2Q &b);

// tr sqrt(sqrt(rho) sigma sqrt(rho)); reduces to the pure overlap on
// rank-1 inputs.
Fidelity fidelity_mixed(const DensityMatrix4 &rho, const DensityMatrix4 &sigma);

// sqrt(2(1 - f)). Throws std::domain_error outside [0, 1 + 1e-12].
double bures_distance(const Fidelity &f);

// One summary-table row: the analytic column formulas evaluated at the
// setup's parameters. Concurrence and EoF are exactly 1 (phases preserve
// maximal entanglement); fidelity is |cos theta| with theta = mu*lambda_e,
// d*lambda_b or gamma, and exactly 1 for the global-only setups (ab, dab).
struct MeasureReport {
    PhaseSetup setup;
    double concurrence;
    double eof;
    double fidelity;
    double bures;
};

MeasureReport measure_report(const PhaseSetup &setup);

}  // namespace eprsim
