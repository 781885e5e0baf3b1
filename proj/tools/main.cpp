// Command-line front end. Subcommands: state, chsh, measures, sweep,
// table1. All angles and phases are radians. Results go to stdout,
// diagnostics to stderr. Exit codes: 0 success, 2 usage error, 3 internal
// physics-invariant violation, 4 I/O error.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "eprsim/chsh.hpp"
#include "eprsim/harness.hpp"
#include "eprsim/json_io.hpp"
#include "eprsim/measures.hpp"
#include "eprsim/phases.hpp"

namespace {

using eprsim::AxisSpec;
using eprsim::PhaseSetup;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config files are JSON objects whose keys are flag names without the
// leading dashes ({"mu": 1, "lambda1": 0.5}). Applied after parsing, and
// only to options the command line left unset, so flags win. Done by hand
// because CLI11 ignores set_config on subcommands: only the top-level
// app's config option is ever processed.
void apply_config_file(CLI::App *cmd, const std::string &path) {
    std::ifstream input(path);
    if (!input) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    nlohmann::json parsed;
    try {
        input >> parsed;
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!parsed.is_object()) {
        throw UsageError("config file must hold a JSON object");
    }
    for (const auto &entry : parsed.items()) {
        const std::string &key = entry.key();
        if (key == "config") {
            throw UsageError("config key 'config' is not allowed in a config file");
        }
        CLI::Option *op = cmd->get_option_no_throw("--" + key);
        if (op == nullptr && key.size() == 1) {
            op = cmd->get_option_no_throw("-" + key);
        }
        if (op == nullptr) {
            throw UsageError("config key '" + key + "' matches no flag of command '" +
                             cmd->get_name() + "'");
        }
        if (op->count() > 0) continue;  // flags win
        const nlohmann::json &value = entry.value();
        std::string text;
        if (value.is_boolean()) {
            text = value.get<bool>() ? "true" : "false";
        } else if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
            text = buf;
        } else {
            throw UsageError("config key '" + key + "' must be a scalar value");
        }
        op->add_result(text);
        op->run_callback();
    }
}

std::string fmt_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    return buf;
}

std::string fmt_signed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.10f", v);
    return buf;
}

void print_row(const std::string &label, const std::string &value) {
    std::printf("%-16s%s\n", label.c_str(), value.c_str());
}

double parse_double_field(const std::string &text, const std::string &context) {
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw UsageError(context + ": '" + text + "' is not a number");
    }
    return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// min:max:count with inclusive endpoints.
AxisSpec parse_axis(const std::string &text, const std::string &flag) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3) {
        throw UsageError(flag + ": expected min:max:count, got '" + text + "'");
    }
    AxisSpec axis;
    axis.min = parse_double_field(parts[0], flag + " min");
    axis.max = parse_double_field(parts[1], flag + " max");
    char *end = nullptr;
    const long count = std::strtol(parts[2].c_str(), &end, 10);
    if (parts[2].empty() || end != parts[2].c_str() + parts[2].size() || count < 1 ||
        count > 100000) {
        throw UsageError(flag + " count: '" + parts[2] + "' is not a valid point count");
    }
    axis.count = static_cast<int>(count);
    return axis;
}

std::array<double, 4> parse_angles(const std::string &text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 4) {
        throw UsageError("--angles: expected a,b,ap,bp, got '" + text + "'");
    }
    std::array<double, 4> angles;
    for (std::size_t i = 0; i < 4; ++i) {
        angles[i] = parse_double_field(parts[i], "--angles");
    }
    return angles;
}

// The shared --setup/--<param> flag set for state, chsh and measures.
struct SetupOptions {
    std::string kind;
    double phi_b = 0.0;
    double mu = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double d = 0.0;
    double lambda_b = 0.0;
    double gamma = 0.0;
    double g = 0.0;
    double phi_e = 0.0;
    std::map<std::string, CLI::Option *> param_options;

    void attach(CLI::App *cmd) {
        cmd->add_option("--setup", kind, "setup kind: ab, ac, hmw, berry or dab")
            ->required()
            ->check(CLI::IsMember({"ab", "ac", "hmw", "berry", "dab"}));
        param_options["--phi-b"] =
            cmd->add_option("--phi-b", phi_b, "AB magnetic-flux phase (radians)");
        param_options["--mu"] = cmd->add_option("--mu", mu, "AC magnetic dipole");
        param_options["--lambda1"] =
            cmd->add_option("--lambda1", lambda1, "AC line-charge density, left arm");
        param_options["--lambda2"] =
            cmd->add_option("--lambda2", lambda2, "AC line-charge density, right arm");
        param_options["--d"] = cmd->add_option("--d", d, "HMW electric dipole");
        param_options["--lambda-b"] =
            cmd->add_option("--lambda-b", lambda_b, "HMW magnetic line-charge density");
        param_options["--gamma"] =
            cmd->add_option("--gamma", gamma, "Berry phase (radians)");
        param_options["--g"] = cmd->add_option("--g", g, "DAB magnetic charge");
        param_options["--phi-e"] =
            cmd->add_option("--phi-e", phi_e, "DAB electric-flux phase (radians)");
    }

    PhaseSetup build() const {
        static const std::map<std::string, std::vector<std::string>> kAllowed = {
            {"ab", {"--phi-b"}},
            {"ac", {"--mu", "--lambda1", "--lambda2"}},
            {"hmw", {"--d", "--lambda-b"}},
            {"berry", {"--gamma"}},
            {"dab", {"--g", "--phi-e"}},
        };
        const std::vector<std::string> &allowed = kAllowed.at(kind);
        for (const auto &[name, option] : param_options) {
            if (option->count() == 0) continue;
            if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
                throw UsageError(name + " does not apply to setup '" + kind + "'");
            }
        }
        PhaseSetup setup;
        if (kind == "ab") {
            setup = eprsim::AbSetup{phi_b};
        } else if (kind == "ac") {
            setup = eprsim::AcSetup{mu, lambda1, lambda2};
        } else if (kind == "hmw") {
            setup = eprsim::HmwSetup{d, lambda_b};
        } else if (kind == "berry") {
            setup = eprsim::BerrySetup{gamma};
        } else {
            setup = eprsim::DabSetup{g, phi_e};
        }
        eprsim::validate_setup(setup);
        return setup;
    }
};

std::vector<std::pair<std::string, double>> setup_params(const PhaseSetup &setup) {
    using Rows = std::vector<std::pair<std::string, double>>;
    return std::visit(
        [](const auto &s) -> Rows {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, eprsim::AbSetup>) {
                return {{"phi_b", s.phi_b}};
            } else if constexpr (std::is_same_v<T, eprsim::AcSetup>) {
                return {{"mu", s.mu}, {"lambda1", s.lambda1}, {"lambda2", s.lambda2}};
            } else if constexpr (std::is_same_v<T, eprsim::HmwSetup>) {
                return {{"d", s.d}, {"lambda_b", s.lambda_b}};
            } else if constexpr (std::is_same_v<T, eprsim::BerrySetup>) {
                return {{"gamma", s.gamma}};
            } else {
                return {{"g", s.g}, {"phi_e", s.phi_e}};
            }
        },
        setup);
}

void print_setup_rows(const PhaseSetup &setup) {
    print_row("setup", std::string(eprsim::setup_kind(setup)));
    for (const auto &[name, value] : setup_params(setup)) {
        print_row(name, fmt_fixed(value));
    }
}

void emit_json(const nlohmann::json &j) { std::cout << j.dump(2) << "\n"; }

int run_state(const SetupOptions &opts, bool as_json) {
    const PhaseSetup setup = opts.build();
    const eprsim::PureState2Q state = eprsim::apply_phase(eprsim::singlet(), setup);
    const eprsim::PhaseDecomposition decomposition = eprsim::decompose(setup);
    if (as_json) {
        emit_json({{"setup", eprsim::to_json(setup)},
                   {"amplitudes", eprsim::to_json(state)},
                   {"global_phase", decomposition.global_phase},
                   {"relative_phase", decomposition.relative_phase}});
        return 0;
    }
    print_setup_rows(setup);
    static const char *kBasis[4] = {"|uu>", "|ud>", "|du>", "|dd>"};
    for (int b = 0; b < 4; ++b) {
        const eprsim::Complex amp = state.amplitude(b);
        print_row(kBasis[b], fmt_signed(amp.real()) + " " + fmt_signed(amp.imag()) + "i");
    }
    print_row("global phase", fmt_fixed(decomposition.global_phase));
    print_row("relative phase", fmt_fixed(decomposition.relative_phase));
    return 0;
}

int run_chsh(const SetupOptions &opts, bool as_json, bool canonical,
             const std::string &angles_text, const std::string &optimize_mode) {
    const PhaseSetup setup = opts.build();
    const eprsim::PureState2Q state = eprsim::apply_phase(eprsim::singlet(), setup);

    eprsim::ChshResult result = [&] {
        if (canonical) {
            return eprsim::s_value(state, eprsim::canonical_angles());
        }
        if (!angles_text.empty()) {
            const std::array<double, 4> a = parse_angles(angles_text);
            return eprsim::s_value(state, eprsim::ChshAngles::in_plane(a[0], a[1], a[2], a[3]));
        }
        const eprsim::AngleMode mode = optimize_mode == "sphere"
                                           ? eprsim::AngleMode::full_sphere
                                           : eprsim::AngleMode::in_plane;
        return eprsim::maximize_s(state, mode);
    }();

    if (as_json) {
        emit_json(eprsim::to_json(result));
    } else {
        print_setup_rows(setup);
        if (result.angles.is_in_plane()) {
            const std::array<double, 4> &pa = result.angles.plane_angles();
            print_row("a", fmt_fixed(pa[0]));
            print_row("b", fmt_fixed(pa[1]));
            print_row("a'", fmt_fixed(pa[2]));
            print_row("b'", fmt_fixed(pa[3]));
        } else {
            const std::array<std::pair<const char *, const eprsim::MeasurementDirection *>, 4>
                dirs = {{{"a", &result.angles.a()},
                         {"b", &result.angles.b()},
                         {"a'", &result.angles.a_prime()},
                         {"b'", &result.angles.b_prime()}}};
            for (const auto &[label, dir] : dirs) {
                print_row(label, "(" + fmt_signed(dir->x()) + ", " + fmt_signed(dir->y()) +
                                     ", " + fmt_signed(dir->z()) + ")");
            }
        }
        print_row("E(a,b)", fmt_signed(result.e_ab));
        print_row("E(a,b')", fmt_signed(result.e_ab_prime));
        print_row("E(a',b)", fmt_signed(result.e_aprime_b));
        print_row("E(a',b')", fmt_signed(result.e_aprime_bprime));
        print_row("S", fmt_fixed(result.s));
        print_row("classification",
                  std::string(eprsim::classification_name(result.classification)));
    }
    return result.classification == eprsim::BoundClassification::exceeds_tsirelson ? 3 : 0;
}

int run_measures(const SetupOptions &opts, bool as_json) {
    const eprsim::MeasureReport report = eprsim::measure_report(opts.build());
    if (as_json) {
        emit_json(eprsim::to_json(report));
        return 0;
    }
    print_setup_rows(report.setup);
    print_row("concurrence", fmt_fixed(report.concurrence));
    print_row("eof", fmt_fixed(report.eof));
    print_row("fidelity", fmt_fixed(report.fidelity));
    print_row("bures", fmt_fixed(report.bures));
    return 0;
}

int run_sweep(const std::string &kind, const std::string &p1_text,
              const std::string &p2_text, const std::string &quantity,
              const std::string &out_path, const std::string &format, bool as_json) {
    eprsim::SweepGrid grid;
    grid.kind = kind == "ac" ? eprsim::SweepKind::ac : eprsim::SweepKind::hmw;
    grid.param1 = parse_axis(p1_text, "--p1");
    grid.param2 = parse_axis(p2_text, "--p2");
    if (quantity == "fidelity") {
        grid.quantity = eprsim::SweepQuantity::fidelity;
    } else if (quantity == "bures") {
        grid.quantity = eprsim::SweepQuantity::bures;
    } else {
        grid.quantity = eprsim::SweepQuantity::both;
    }

    const std::vector<eprsim::SweepCell> cells = eprsim::run_sweep(grid);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    if (format == "json") {
        out << eprsim::sweep_to_json(grid, cells).dump(2) << "\n";
    } else {
        eprsim::write_sweep_csv(out, cells);
    }
    out.flush();
    if (!out) {
        throw IoError("write to '" + out_path + "' failed");
    }

    double fid_min = cells[0].fidelity, fid_max = cells[0].fidelity;
    double bures_min = cells[0].bures, bures_max = cells[0].bures;
    for (const eprsim::SweepCell &cell : cells) {
        fid_min = std::min(fid_min, cell.fidelity);
        fid_max = std::max(fid_max, cell.fidelity);
        bures_min = std::min(bures_min, cell.bures);
        bures_max = std::max(bures_max, cell.bures);
    }
    const bool want_f = grid.quantity != eprsim::SweepQuantity::bures;
    const bool want_b = grid.quantity != eprsim::SweepQuantity::fidelity;

    if (as_json) {
        nlohmann::json summary = {{"cells", cells.size()}, {"out", out_path}};
        if (want_f) summary["fidelity"] = {{"min", fid_min}, {"max", fid_max}};
        if (want_b) summary["bures"] = {{"min", bures_min}, {"max", bures_max}};
        emit_json(summary);
        return 0;
    }
    print_row("cells", std::to_string(cells.size()));
    if (want_f) {
        print_row("fidelity min", fmt_fixed(fid_min));
        print_row("fidelity max", fmt_fixed(fid_max));
    }
    if (want_b) {
        print_row("bures min", fmt_fixed(bures_min));
        print_row("bures max", fmt_fixed(bures_max));
    }
    print_row("wrote", out_path);
    return 0;
}

int run_table1(double theta, const std::string &format, bool as_json) {
    const std::array<eprsim::MeasureReport, 5> rows = eprsim::table1_report(theta);
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const eprsim::MeasureReport &row : rows) out.push_back(eprsim::to_json(row));
        emit_json(out);
        return 0;
    }
    if (format == "csv") {
        eprsim::write_table1_csv(std::cout, rows);
    } else {
        eprsim::write_table1_markdown(std::cout, rows);
    }
    return std::cout ? 0 : 4;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Entangled spin-1/2 pairs in geometric-phase interferometers: phased "
        "states, CHSH statistics, entanglement and distance measures. All "
        "angles and phases are radians."};
    app.require_subcommand(1);

    std::string config_path;
    auto add_command = [&app, &config_path](const char *name, const char *description) {
        CLI::App *cmd = app.add_subcommand(name, description);
        cmd->add_option("--config", config_path,
                        "JSON config file; keys mirror flag names without dashes, "
                        "command-line flags win");
        return cmd;
    };

    bool state_json = false;
    CLI::App *state_cmd = add_command("state", "Apply a setup's phase to the singlet");
    SetupOptions state_opts;
    state_opts.attach(state_cmd);
    state_cmd->add_flag("--json", state_json, "emit JSON");

    bool chsh_json = false;
    bool chsh_canonical = false;
    std::string chsh_angles;
    std::string chsh_optimize;
    CLI::App *chsh_cmd = add_command("chsh", "CHSH statistic for a setup");
    SetupOptions chsh_opts;
    chsh_opts.attach(chsh_cmd);
    chsh_cmd->add_flag("--json", chsh_json, "emit JSON");
    CLI::Option_group *mode_group =
        chsh_cmd->add_option_group("mode", "measurement settings");
    mode_group->add_flag("--canonical", chsh_canonical,
                         "use the angles (0, pi/4, pi/2, 3pi/4)");
    mode_group->add_option("--angles", chsh_angles,
                           "four in-plane angles a,b,ap,bp (radians)");
    mode_group->add_option("--optimize", chsh_optimize, "maximize S over settings")
        ->check(CLI::IsMember({"in-plane", "sphere"}));
    mode_group->require_option(1);

    bool measures_json = false;
    CLI::App *measures_cmd =
        add_command("measures", "Concurrence, EoF, fidelity and Bures distance");
    SetupOptions measures_opts;
    measures_opts.attach(measures_cmd);
    measures_cmd->add_flag("--json", measures_json, "emit JSON");

    bool sweep_json = false;
    std::string sweep_setup_kind;
    std::string sweep_p1;
    std::string sweep_p2;
    std::string sweep_quantity = "both";
    std::string sweep_out;
    std::string sweep_format = "csv";
    CLI::App *sweep_cmd =
        add_command("sweep", "Fidelity/Bures sweep over a parameter grid");
    sweep_cmd->add_option("--setup", sweep_setup_kind, "setup kind: ac or hmw")
        ->required()
        ->check(CLI::IsMember({"ac", "hmw"}));
    sweep_cmd->add_option("--p1", sweep_p1, "coupling axis min:max:count (mu or d)")
        ->required();
    sweep_cmd
        ->add_option("--p2", sweep_p2, "charge-density axis min:max:count (lambda_e or lambda_b)")
        ->required();
    sweep_cmd->add_option("--quantity", sweep_quantity, "fidelity, bures or both")
        ->check(CLI::IsMember({"fidelity", "bures", "both"}));
    sweep_cmd->add_option("--out", sweep_out, "output file path")->required();
    sweep_cmd->add_option("--format", sweep_format, "output file format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--json", sweep_json, "emit the stdout summary as JSON");

    bool table1_json = false;
    double table1_theta = 1.0471975511965976;  // pi/3
    std::string table1_format = "md";
    CLI::App *table1_cmd = add_command("table1", "Five-setup summary report");
    table1_cmd->add_option("--theta", table1_theta,
                           "phase angle used for every setup (radians)");
    table1_cmd->add_option("--format", table1_format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    table1_cmd->add_flag("--json", table1_json, "emit JSON");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            for (CLI::App *sub : app.get_subcommands()) {
                apply_config_file(sub, config_path);
            }
        }
        if (state_cmd->parsed()) return run_state(state_opts, state_json);
        if (chsh_cmd->parsed()) {
            return run_chsh(chsh_opts, chsh_json, chsh_canonical, chsh_angles,
                            chsh_optimize);
        }
        if (measures_cmd->parsed()) return run_measures(measures_opts, measures_json);
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_setup_kind, sweep_p1, sweep_p2, sweep_quantity,
                             sweep_out, sweep_format, sweep_json);
        }
        return run_table1(table1_theta, table1_format, table1_json);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const eprsim::ConfigError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
