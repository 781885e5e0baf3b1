#pragma once

// JSON encoding of the public value types; these schemas are the CLI's
// --json contract. States serialize as [re, im] pairs, setups as tagged
// objects keyed by "kind", sweeps as a grid header plus a flat cell list.

#include <vector>

#include <json.hpp>

#include "eprsim/chsh.hpp"
#include "eprsim/harness.hpp"

namespace eprsim {

// Array of 4 [re, im] pairs in basis order.
nlohmann::json to_json(const PureState2Q &psi);
PureState2Q pure_state_from_json(const nlohmann::json &j);

// Array of 16 [re, im] pairs, row-major.
nlohmann::json to_json(const DensityMatrix4 &rho);
DensityMatrix4 density_from_json(const nlohmann::json &j);

// {"kind": "ab"|"ac"|"hmw"|"berry"|"dab", params by name in radians /
// natural units}. Parsing rejects unknown kinds and stray keys; absent
// params default to 0.
nlohmann::json to_json(const PhaseSetup &setup);
PhaseSetup setup_from_json(const nlohmann::json &j);

// {"global_phase": f, "relative_phase": f}
nlohmann::json to_json(const PhaseDecomposition &decomposition);

// In-plane settings encode as 4 angles, free directions as 4 [x, y, z]
// triples.
nlohmann::json to_json(const ChshAngles &angles);

// {"angles": [...], "expectations": [e_ab, e_ab', e_a'b, e_a'b'],
//  "s": f, "classification": string}
nlohmann::json to_json(const ChshResult &result);

// {"setup": {...}, "concurrence": f, "eof": f, "fidelity": f, "bures": f}
nlohmann::json to_json(const MeasureReport &report);

nlohmann::json to_json(const SweepGrid &grid);

// {"grid": {...}, "cells": [[p1, p2, fidelity, bures], ...]} in run_sweep
// order.
nlohmann::json sweep_to_json(const SweepGrid &grid, const std::vector<SweepCell> &cells);

}  // namespace eprsim
