#pragma once

// Experiment harness: fidelity/Bures parameter sweeps over the coupling
// strength and the effective charge density, the five-row summary report,
// and deterministic random-state generation for the property suites. All
// file formatting lives here so the CLI stays a thin dispatcher.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "eprsim/measures.hpp"

namespace eprsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which setup family a sweep drives. Both are two-parameter setups whose
// relative phase is 2 * p1 * p2.
enum class SweepKind { ac, hmw };

enum class SweepQuantity { fidelity, bures, both };

// Inclusive range sampled at `count` evenly spaced points. min == max is a
// degenerate but legal axis (every sample equals min).
struct AxisSpec {
    double min;
    double max;
    int count;
};

struct SweepGrid {
    SweepKind kind;
    AxisSpec param1;  // mu (ac) or d (hmw)
    AxisSpec param2;  // lambda_e (ac) or lambda_b (hmw)
    SweepQuantity quantity = SweepQuantity::both;
};

struct SweepCell {
    double p1;
    double p2;
    double fidelity;
    double bures;
};

const char *sweep_kind_name(SweepKind kind);
const char *sweep_quantity_name(SweepQuantity quantity);

// Throws ConfigError if a count is below 2, a bound is not finite, or
// min > max.
void validate_grid(const SweepGrid &grid);

// min + (max - min) * index / (count - 1), with the last index forced to
// max so both endpoints are exact.
double axis_value(const AxisSpec &axis, int index);

// Evaluates every grid point through the full pipeline (apply_phase on the
// singlet, then fidelity_pure and bures_distance) rather than the closed
// form |cos(p1 * p2)|. Row-major: p1 is the outer loop, ascending.
std::vector<SweepCell> run_sweep(const SweepGrid &grid);

// CSV with the fixed header "p1,p2,fidelity,bures", one row per cell in
// run_sweep order, 9 significant digits, LF endings, final newline.
void write_sweep_csv(std::ostream &out, const std::vector<SweepCell> &cells);

// The five setups of the summary table in row order (AB, AC, HMW, Berry,
// DAB), each with phase angle theta: AB uses phi_b = theta, AC uses mu = 1
// and lambda1 = theta, HMW uses d = 1 and lambda_b = theta, Berry uses
// gamma = theta, DAB uses g = 1 and phi_e = theta.
std::array<PhaseSetup, 5> default_table1_setups(double theta);

// Measure reports for default_table1_setups(theta). Default theta = pi/3
// lands the AC row on (1, 1, 0.5, 1).
std::array<MeasureReport, 5> table1_report(double theta);
std::array<MeasureReport, 5> table1_report();

// CSV with header "setup,concurrence,eof,fidelity,bures", 9 significant
// digits.
void write_table1_csv(std::ostream &out, const std::array<MeasureReport, 5> &rows);

// Markdown table with padded, right-aligned numeric columns, 10
// significant digits.
void write_table1_markdown(std::ostream &out, const std::array<MeasureReport, 5> &rows);

// Haar-random pure state, deterministic for a given seed and portable
// across platforms. Algorithm (frozen; golden seeds depend on it):
// mt19937_64 seeded directly, uniforms in (0, 1] as ((x >> 11) + 1) *
// 2^-53, Box-Muller pairs (cosine branch first) yielding eight standard
// normals taken as Re/Im of the four amplitudes in basis order, then
// normalized.
PureState2Q random_pure_state(std::uint64_t seed);

}  // namespace eprsim
