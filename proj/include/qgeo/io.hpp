// Copyright 2026 The qgeo Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * File formats shared between the library and the CLI.
 *
 *  - State JSON:        {"amplitudes": [[re, im], ...]}
 *    (normalized on load; at least two amplitudes, nonzero norm)
 *  - Hamiltonian JSON:  {"matrix": [[[re, im], ...], ...], "hbar": h}
 *    row-major, Hermitian; synthesized files carry a "t_min" sidecar field.
 *  - Verification JSON: all report scalars plus per-verdict tolerances.
 *  - Trajectory tables: CSV with a fixed header, or the equivalent
 *    {"columns": [...], "rows": [[...]]} JSON.
 *
 * Numbers serialize with 12 significant digits in CSV and full binary64
 * round-trip precision in JSON.  All serialization is deterministic:
 * identical inputs produce byte-identical bytes.
 *
 * Requires nlohmann/json (vendored as <json.hpp>).
 */

#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgeo/error.hpp"
#include "qgeo/evolve.hpp"
#include "qgeo/state.hpp"
#include "qgeo/verify.hpp"

namespace qgeo::io {

/// Insertion-ordered JSON so emitted documents have a stable, readable
/// field order.
using json = nlohmann::ordered_json;

/// A Hamiltonian file: the generator, its action scale, and (for synthesized
/// files) the minimal transit time.
struct HamiltonianFile {
  Hamiltonian hamiltonian;
  double hbar = 1.0;
  std::optional<double> t_min;
};

namespace detail_io {

/// Reads a whole file; throws InvalidArgument naming the path on failure.
inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  qgeo::detail::require(in.good(), errc::invalid_argument,
                        "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses JSON; throws InvalidArgument naming the path on failure.
inline json parse(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::invalid_argument,
                "file '" + path + "' is not valid JSON: " + e.what());
  }
}

/// Reads one [re, im] pair; throws InvalidArgument with context on failure.
inline complexd read_complex(const json& j, const std::string& context) {
  qgeo::detail::require(
      j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
      errc::invalid_argument, context + ": expected a [re, im] number pair");
  return complexd(j[0].get<double>(), j[1].get<double>());
}

}  // namespace detail_io

/// Loads a pure state from {"amplitudes": [[re, im], ...]}; the amplitudes
/// are normalized.  Every failure (unreadable file, bad JSON, wrong shape,
/// zero vector, dimension < 2) surfaces as InvalidArgument naming the file,
/// so callers can treat the whole load as one parse step.
inline PureState load_state(const std::string& path) {
  const json j = detail_io::parse(path);
  qgeo::detail::require(j.is_object() && j.contains("amplitudes") &&
                            j["amplitudes"].is_array(),
                        errc::invalid_argument,
                        "file '" + path +
                            "' must be an object with an \"amplitudes\" array");
  const json& amps = j["amplitudes"];
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t k = 0; k < amps.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = detail_io::read_complex(
        amps[k], "file '" + path + "', amplitude " + std::to_string(k));
  try {
    return normalize(v);
  } catch (const error& e) {
    throw error(errc::invalid_argument,
                "file '" + path + "': " + e.what());
  }
}

/// Serializes a pure state to the state JSON format.
inline json state_to_json(const PureState& s) {
  json amps = json::array();
  for (Eigen::Index k = 0; k < s.dim(); ++k)
    amps.push_back({s[k].real(), s[k].imag()});
  return json{{"amplitudes", std::move(amps)}};
}

/// Serializes a Hamiltonian (+ hbar, + optional t_min) to the Hamiltonian
/// JSON format.
inline json hamiltonian_to_json(const Hamiltonian& h, double hbar,
                                std::optional<double> t_min = std::nullopt) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < h.dim(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < h.dim(); ++c)
      row.push_back({h.matrix()(r, c).real(), h.matrix()(r, c).imag()});
    rows.push_back(std::move(row));
  }
  json out{{"matrix", std::move(rows)}, {"hbar", hbar}};
  if (t_min) out["t_min"] = *t_min;
  return out;
}

/// Loads a Hamiltonian file.  Shape/Hermiticity/hbar failures surface as
/// InvalidArgument naming the file.
inline HamiltonianFile load_hamiltonian(const std::string& path) {
  const json j = detail_io::parse(path);
  qgeo::detail::require(
      j.is_object() && j.contains("matrix") && j["matrix"].is_array(),
      errc::invalid_argument,
      "file '" + path + "' must be an object with a \"matrix\" array");
  const json& rows = j["matrix"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    qgeo::detail::require(
        row.is_array() && static_cast<Eigen::Index>(row.size()) == n,
        errc::invalid_argument,
        "file '" + path + "': matrix row " + std::to_string(r) +
            " does not make the matrix square");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = detail_io::read_complex(
          row[static_cast<std::size_t>(c)],
          "file '" + path + "', matrix entry (" + std::to_string(r) + "," +
              std::to_string(c) + ")");
  }
  HamiltonianFile out{[&] {
                        try {
                          return make_hamiltonian(m);
                        } catch (const error& e) {
                          throw error(errc::invalid_argument,
                                      "file '" + path + "': " + e.what());
                        }
                      }(),
                      1.0, std::nullopt};
  if (j.contains("hbar")) {
    qgeo::detail::require(j["hbar"].is_number(), errc::invalid_argument,
                          "file '" + path + "': \"hbar\" must be a number");
    out.hbar = j["hbar"].get<double>();
    qgeo::detail::require(out.hbar > 0.0, errc::invalid_argument,
                          "file '" + path + "': \"hbar\" must be positive");
  }
  if (j.contains("t_min")) {
    qgeo::detail::require(j["t_min"].is_number(), errc::invalid_argument,
                          "file '" + path + "': \"t_min\" must be a number");
    out.t_min = j["t_min"].get<double>();
  }
  return out;
}

/// Serializes a verification report: all scalar fields plus the per-verdict
/// tolerances that were applied.
inline json report_to_json(const VerificationReport& rep) {
  return json{
      {"samples", rep.samples},
      {"path_length", rep.path_length},
      {"geodesic_length", rep.geodesic_length},
      {"delta_s", rep.delta_s},
      {"efficiency", rep.efficiency},
      {"phases",
       {{"total", rep.phases.phi_total},
        {"dynamical", rep.phases.phi_dynamical},
        {"geometric", rep.phases.phi_geometric}}},
      {"bound_lhs", rep.bound_lhs},
      {"bound_rhs", rep.bound_rhs},
      {"verdicts",
       {{"length_minimal", rep.verdicts.length_minimal},
        {"unit_efficiency", rep.verdicts.unit_efficiency},
        {"null_phase", rep.verdicts.null_phase}}},
      {"tolerances",
       {{"length_minimal", rep.tolerances.length},
        {"unit_efficiency", rep.tolerances.efficiency},
        {"null_phase", rep.tolerances.phase}}},
  };
}

/// A trajectory table: named columns over double-valued rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Formats one double with 12 significant digits (CSV precision).
inline std::string format_csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Writes a table as CSV with the fixed header.
inline void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << format_csv_number(row[c]);
    os << "\n";
  }
}

/// The same table as {"columns": [...], "rows": [[...]]} JSON.
inline json table_to_json(const Table& table) {
  json out{{"columns", table.columns}, {"rows", json::array()}};
  for (const auto& row : table.rows) out["rows"].push_back(row);
  return out;
}

}  // namespace qgeo::io
