#include "eprsim/json_io.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace eprsim {

namespace {

using nlohmann::json;

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected an [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

double read_param(const json &j, const char *key) {
    if (!j.contains(key)) return 0.0;
    if (!j.at(key).is_number()) {
        throw std::invalid_argument(std::string("setup parameter '") + key +
                                    "' must be a number");
    }
    return j.at(key).get<double>();
}

void reject_stray_keys(const json &j, std::initializer_list<const char *> allowed) {
    for (const auto &item : j.items()) {
        bool known = false;
        for (const char *key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown setup key '" + item.key() + "'");
        }
    }
}

json axis_to_json(const AxisSpec &axis) {
    return {{"min", axis.min}, {"max", axis.max}, {"count", axis.count}};
}

}  // namespace

json to_json(const PureState2Q &psi) {
    json out = json::array();
    for (int b = 0; b < 4; ++b) out.push_back(complex_pair(psi.amplitude(b)));
    return out;
}

PureState2Q pure_state_from_json(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("pure state: expected 4 [re, im] pairs");
    }
    CVec4 amp;
    for (int b = 0; b < 4; ++b) amp[b] = pair_to_complex(j[static_cast<std::size_t>(b)]);
    return PureState2Q(amp);
}

json to_json(const DensityMatrix4 &rho) {
    json out = json::array();
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) out.push_back(complex_pair(rho.matrix()(i, k)));
    }
    return out;
}

DensityMatrix4 density_from_json(const json &j) {
    if (!j.is_array() || j.size() != 16) {
        throw std::invalid_argument("density matrix: expected 16 [re, im] pairs");
    }
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            m(i, k) = pair_to_complex(j[static_cast<std::size_t>(4 * i + k)]);
        }
    }
    return DensityMatrix4(m);
}

json to_json(const PhaseSetup &setup) {
    return std::visit(
        [](const auto &s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbSetup>) {
                return {{"kind", "ab"}, {"phi_b", s.phi_b}};
            } else if constexpr (std::is_same_v<T, AcSetup>) {
                return {{"kind", "ac"},
                        {"mu", s.mu},
                        {"lambda1", s.lambda1},
                        {"lambda2", s.lambda2}};
            } else if constexpr (std::is_same_v<T, HmwSetup>) {
                return {{"kind", "hmw"}, {"d", s.d}, {"lambda_b", s.lambda_b}};
            } else if constexpr (std::is_same_v<T, BerrySetup>) {
                return {{"kind", "berry"}, {"gamma", s.gamma}};
            } else {
                return {{"kind", "dab"}, {"g", s.g}, {"phi_e", s.phi_e}};
            }
        },
        setup);
}

PhaseSetup setup_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw std::invalid_argument("setup: expected an object with a \"kind\" string");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ab") {
        reject_stray_keys(j, {"kind", "phi_b"});
        return AbSetup{read_param(j, "phi_b")};
    }
    if (kind == "ac") {
        reject_stray_keys(j, {"kind", "mu", "lambda1", "lambda2"});
        return AcSetup{read_param(j, "mu"), read_param(j, "lambda1"),
                       read_param(j, "lambda2")};
    }
    if (kind == "hmw") {
        reject_stray_keys(j, {"kind", "d", "lambda_b"});
        return HmwSetup{read_param(j, "d"), read_param(j, "lambda_b")};
    }
    if (kind == "berry") {
        reject_stray_keys(j, {"kind", "gamma"});
        return BerrySetup{read_param(j, "gamma")};
    }
    if (kind == "dab") {
        reject_stray_keys(j, {"kind", "g", "phi_e"});
        return DabSetup{read_param(j, "g"), read_param(j, "phi_e")};
    }
    throw std::invalid_argument("unknown setup kind '" + kind + "'");
}

json to_json(const PhaseDecomposition &decomposition) {
    return {{"global_phase", decomposition.global_phase},
            {"relative_phase", decomposition.relative_phase}};
}

json to_json(const ChshAngles &angles) {
    json out = json::array();
    if (angles.is_in_plane()) {
        for (double a : angles.plane_angles()) out.push_back(a);
        return out;
    }
    const std::array<const MeasurementDirection *, 4> dirs = {
        &angles.a(), &angles.b(), &angles.a_prime(), &angles.b_prime()};
    for (const MeasurementDirection *d : dirs) {
        out.push_back(json::array({d->x(), d->y(), d->z()}));
    }
    return out;
}

json to_json(const ChshResult &result) {
    return {{"angles", to_json(result.angles)},
            {"expectations", json::array({result.e_ab, result.e_ab_prime,
                                          result.e_aprime_b, result.e_aprime_bprime})},
            {"s", result.s},
            {"classification", std::string(classification_name(result.classification))}};
}

json to_json(const MeasureReport &report) {
    return {{"setup", to_json(report.setup)},
            {"concurrence", report.concurrence},
            {"eof", report.eof},
            {"fidelity", report.fidelity},
            {"bures", report.bures}};
}

json to_json(const SweepGrid &grid) {
    return {{"kind", sweep_kind_name(grid.kind)},
            {"param1", axis_to_json(grid.param1)},
            {"param2", axis_to_json(grid.param2)},
            {"quantity", sweep_quantity_name(grid.quantity)}};
}

json sweep_to_json(const SweepGrid &grid, const std::vector<SweepCell> &cells) {
    json cell_rows = json::array();
    for (const SweepCell &cell : cells) {
        cell_rows.push_back(json::array({cell.p1, cell.p2, cell.fidelity, cell.bures}));
    }
    return {{"grid", to_json(grid)}, {"cells", std::move(cell_rows)}};
}

}  // namespace eprsim
