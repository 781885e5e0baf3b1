#pragma once

// CHSH statistic S = |E(a,b) - E(a,b')| + |E(a',b) + E(a',b')|, bound
// classification against the classical (2) and Tsirelson (2*sqrt 2) limits,
// and a derivative-free maximizer over measurement angles.

#include <array>
#include <optional>
#include <string_view>

#include "eprsim/measurement.hpp"

namespace eprsim {

inline constexpr double kClassicalBound = 2.0;
inline constexpr double kTsirelsonBound = 2.8284271247461903;  // 2*sqrt(2)

enum class BoundClassification { no_violation, violates_classical, exceeds_tsirelson };

// "no_violation", "violates_classical" or "exceeds_tsirelson".
std::string_view classification_name(BoundClassification c);

enum class AngleMode { in_plane, full_sphere };

// Four measurement settings (a, b, a', b'), either as in-plane angles
// (stored wrapped to [0, 2pi)) or as free Bloch directions.
class ChshAngles {
  public:
    static ChshAngles in_plane(double alpha, double beta, double alpha_prime,
                               double beta_prime);
    static ChshAngles directions(const MeasurementDirection &a, const MeasurementDirection &b,
                                 const MeasurementDirection &a_prime,
                                 const MeasurementDirection &b_prime);

    bool is_in_plane() const { return plane_.has_value(); }
    // (alpha, beta, alpha', beta'); throws std::logic_error in direction mode.
    const std::array<double, 4> &plane_angles() const;

    const MeasurementDirection &a() const { return dirs_[0]; }
    const MeasurementDirection &b() const { return dirs_[1]; }
    const MeasurementDirection &a_prime() const { return dirs_[2]; }
    const MeasurementDirection &b_prime() const { return dirs_[3]; }

  private:
    ChshAngles(const std::array<MeasurementDirection, 4> &dirs,
               std::optional<std::array<double, 4>> plane)
        : dirs_(dirs), plane_(plane) {}

    std::array<MeasurementDirection, 4> dirs_;
    std::optional<std::array<double, 4>> plane_;
};

struct ChshResult {
    ChshAngles angles;
    double e_ab;
    double e_ab_prime;
    double e_aprime_b;
    double e_aprime_bprime;
    double s;
    BoundClassification classification;
};

// Search parameters for maximize_s. The coarse stage evaluates a full grid
// (in-plane: points-per-angle^4 angle tuples; full-sphere: all tuples of a
// Fibonacci-lattice direction set of the same size per slot), then the best
// `restarts` cells are refined by cyclic coordinate ascent whose step
// shrinks by `shrink_factor` after every improvement-free cycle. Sphere
// mode adds `restarts` extra start points drawn from an mt19937_64 seeded
// with the fixed constant 0x9e3779b97f4a7c15, so runs are reproducible.
struct OptimizerConfig {
    int coarse_grid_points_per_angle = 24;
    int refinement_iterations = 60;
    double initial_step = 0.2617993877991494;  // pi/12
    double shrink_factor = 0.5;
    int restarts = 8;
};

// Throws std::invalid_argument unless all fields are positive and
// shrink_factor lies in (0, 1).
void validate_config(const OptimizerConfig &cfg);

using Mat3 = std::array<std::array<double, 3>, 3>;

// The angle set (alpha, beta, alpha', beta') = (0, pi/4, pi/2, 3pi/4) that
// turns the phased singlet's S into sqrt(2) + sqrt(2)|cos(phi)|.
ChshAngles canonical_angles();

// All four expectations via joint_expectation, assembled into S and
// classified.
ChshResult s_value(const PureState2Q &psi, const ChshAngles &angles);

// sqrt(2) + sqrt(2)|cos(phi)|: S at the canonical angles as a function of
// the relative phase.
double canonical_s(double phi);

// T[i][j] = <psi| sigma_i (x) sigma_j |psi>.
Mat3 correlation_matrix(const PureState2Q &psi);

// Deterministic maximization of S over measurement settings; see
// OptimizerConfig for the search scheme.
ChshResult maximize_s(const PureState2Q &psi, AngleMode mode,
                      const OptimizerConfig &cfg = {});

}  // namespace eprsim
