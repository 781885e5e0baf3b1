#include "eprsim/harness.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

namespace eprsim {

namespace {

constexpr double kPi = 3.141592653589793;

std::string fmt9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string fmt10(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void validate_axis(const AxisSpec &axis, const char *label) {
    if (!(std::isfinite(axis.min) && std::isfinite(axis.max))) {
        throw ConfigError(std::string(label) + ": bounds must be finite");
    }
    if (axis.count < 2) {
        throw ConfigError(std::string(label) + ": count must be at least 2");
    }
    if (axis.min > axis.max) {
        throw ConfigError(std::string(label) + ": min exceeds max");
    }
}

PhaseSetup sweep_setup(SweepKind kind, double p1, double p2) {
    if (kind == SweepKind::ac) {
        return AcSetup{p1, p2, 0.0};
    }
    return HmwSetup{p1, p2};
}

}  // namespace

const char *sweep_kind_name(SweepKind kind) {
    return kind == SweepKind::ac ? "ac" : "hmw";
}

const char *sweep_quantity_name(SweepQuantity quantity) {
    switch (quantity) {
        case SweepQuantity::fidelity: return "fidelity";
        case SweepQuantity::bures: return "bures";
        default: return "both";
    }
}

void validate_grid(const SweepGrid &grid) {
    validate_axis(grid.param1, "param1");
    validate_axis(grid.param2, "param2");
}

double axis_value(const AxisSpec &axis, int index) {
    if (index == axis.count - 1) return axis.max;
    return axis.min + (axis.max - axis.min) * static_cast<double>(index) /
                          static_cast<double>(axis.count - 1);
}

std::vector<SweepCell> run_sweep(const SweepGrid &grid) {
    validate_grid(grid);
    const PureState2Q initial = singlet();
    std::vector<SweepCell> cells;
    cells.reserve(static_cast<std::size_t>(grid.param1.count) *
                  static_cast<std::size_t>(grid.param2.count));
    for (int i = 0; i < grid.param1.count; ++i) {
        const double p1 = axis_value(grid.param1, i);
        for (int j = 0; j < grid.param2.count; ++j) {
            const double p2 = axis_value(grid.param2, j);
            const PureState2Q final_state =
                apply_phase(initial, sweep_setup(grid.kind, p1, p2));
            const Fidelity f = fidelity_pure(initial, final_state);
            cells.push_back({p1, p2, f.value, bures_distance(f)});
        }
    }
    return cells;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepCell> &cells) {
    out << "p1,p2,fidelity,bures\n";
    for (const SweepCell &cell : cells) {
        out << fmt9(cell.p1) << ',' << fmt9(cell.p2) << ',' << fmt9(cell.fidelity)
            << ',' << fmt9(cell.bures) << '\n';
    }
}

std::array<PhaseSetup, 5> default_table1_setups(double theta) {
    return {AbSetup{theta}, AcSetup{1.0, theta, 0.0}, HmwSetup{1.0, theta},
            BerrySetup{theta}, DabSetup{1.0, theta}};
}

std::array<MeasureReport, 5> table1_report(double theta) {
    const std::array<PhaseSetup, 5> setups = default_table1_setups(theta);
    std::array<MeasureReport, 5> rows = {
        measure_report(setups[0]), measure_report(setups[1]),
        measure_report(setups[2]), measure_report(setups[3]),
        measure_report(setups[4])};
    return rows;
}

std::array<MeasureReport, 5> table1_report() { return table1_report(kPi / 3.0); }

void write_table1_csv(std::ostream &out, const std::array<MeasureReport, 5> &rows) {
    out << "setup,concurrence,eof,fidelity,bures\n";
    for (const MeasureReport &row : rows) {
        out << setup_kind(row.setup) << ',' << fmt9(row.concurrence) << ','
            << fmt9(row.eof) << ',' << fmt9(row.fidelity) << ',' << fmt9(row.bures)
            << '\n';
    }
}

void write_table1_markdown(std::ostream &out, const std::array<MeasureReport, 5> &rows) {
    const std::array<std::string, 5> headers = {"setup", "concurrence", "eof",
                                               "fidelity", "bures"};
    std::array<std::array<std::string, 5>, 5> body;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        body[r] = {std::string(setup_kind(rows[r].setup)), fmt10(rows[r].concurrence),
                   fmt10(rows[r].eof), fmt10(rows[r].fidelity), fmt10(rows[r].bures)};
    }

    std::array<std::size_t, 5> widths;
    for (std::size_t c = 0; c < 5; ++c) {
        widths[c] = headers[c].size();
        for (const auto &row : body) {
            if (row[c].size() > widths[c]) widths[c] = row[c].size();
        }
    }

    auto pad = [](const std::string &s, std::size_t width, bool right_align) {
        const std::string fill(width - s.size(), ' ');
        return right_align ? fill + s : s + fill;
    };

    out << "|";
    for (std::size_t c = 0; c < 5; ++c) out << ' ' << pad(headers[c], widths[c], c > 0) << " |";
    out << '\n' << "|";
    for (std::size_t c = 0; c < 5; ++c) out << ' ' << std::string(widths[c], '-') << " |";
    out << '\n';
    for (const auto &row : body) {
        out << "|";
        for (std::size_t c = 0; c < 5; ++c) out << ' ' << pad(row[c], widths[c], c > 0) << " |";
        out << '\n';
    }
}

PureState2Q random_pure_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // (0, 1]; the +1 keeps log() finite in Box-Muller.
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
    };

    std::array<double, 8> normals;
    for (std::size_t k = 0; k < 8; k += 2) {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 2.0 * kPi * uniform();
        normals[k] = r * std::cos(angle);
        normals[k + 1] = r * std::sin(angle);
    }

    const CVec4 v(Complex(normals[0], normals[1]), Complex(normals[2], normals[3]),
                  Complex(normals[4], normals[5]), Complex(normals[6], normals[7]));
    return PureState2Q((1.0 / v.norm()) * v);
}

}  // namespace eprsim
