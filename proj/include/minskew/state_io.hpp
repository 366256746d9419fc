// SPDX-License-Identifier: Apache-2.0
//
// JSON state files and result reports. A state file is
//   {"dim_a": m, "dim_b": n, "matrix": [[ [re, im], ... ], ...]}
// with m*n rows of m*n [re, im] pairs.

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "minskew/min_engine.hpp"
#include "minskew/states.hpp"

namespace minskew {

using json = nlohmann::json;

inline json state_to_json(const BipartiteState& state) {
    const Eigen::Index d = state.rho.rows();
    json rows = json::array();
    for (Eigen::Index i = 0; i < d; ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < d; ++j)
            row.push_back({state.rho(i, j).real(), state.rho(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return json{{"dim_a", state.dim_a}, {"dim_b", state.dim_b}, {"matrix", std::move(rows)}};
}

// Throws FormatError on malformed documents (naming the offending field);
// state-validation failures propagate from the BipartiteState constructor.
inline BipartiteState state_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("state file: top level must be an object");
    for (const char* field : {"dim_a", "dim_b", "matrix"})
        if (!doc.contains(field))
            throw FormatError(std::string("state file: missing field \"") + field + "\"");
    if (!doc["dim_a"].is_number_integer() || !doc["dim_b"].is_number_integer())
        throw FormatError("state file: \"dim_a\"/\"dim_b\" must be integers");
    const int m = doc["dim_a"].get<int>();
    const int n = doc["dim_b"].get<int>();
    if (m < 1 || n < 1) throw FormatError("state file: \"dim_a\"/\"dim_b\" must be positive");
    const auto& rows = doc["matrix"];
    const Eigen::Index d = static_cast<Eigen::Index>(m) * n;
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d))
        throw FormatError("state file: \"matrix\" must have dim_a*dim_b rows");
    cmat rho(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
            throw FormatError("state file: \"matrix\" row " + std::to_string(i) +
                              " must have dim_a*dim_b entries");
        for (Eigen::Index j = 0; j < d; ++j) {
            const auto& entry = row[static_cast<std::size_t>(j)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw FormatError("state file: \"matrix\" entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") must be an [re, im] pair");
            rho(i, j) = cplx(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return BipartiteState(m, n, std::move(rho));
}

inline BipartiteState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open state file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw FormatError("state file " + path + ": " + err.what());
    }
    return state_from_json(doc);
}

inline void write_state_file(const std::string& path, const BipartiteState& state) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write state file: " + path);
    out << state_to_json(state).dump(1) << '\n';
}

inline json report_to_json(const MinReport& report) {
    json subspaces = json::array();
    for (const SubspaceReport& sub : report.subspaces)
        subspaces.push_back({{"dimension", sub.dimension},
                             {"eigenvalue", sub.eigenvalue},
                             {"objective", sub.objective},
                             {"sweeps", sub.sweeps_used},
                             {"rotations", sub.rotations_applied},
                             {"converged", sub.converged}});
    return json{{"value", report.value},
                {"nondegenerate_contribution", report.nondegenerate_contribution},
                {"cross_check", report.cross_check},
                {"wall_time_s", report.wall_time_s},
                {"min_boundary_gap", report.min_boundary_gap},
                {"converged", report.all_converged()},
                {"subspaces", std::move(subspaces)}};
}

}  // namespace minskew
