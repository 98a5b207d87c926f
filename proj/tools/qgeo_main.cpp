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
 * qgeo command-line front end.
 *
 * Subcommands:
 *   distance    A.json B.json [--metric fs|wootters] [--lambda L]
 *   geodesic    A.json B.json [--samples N] [--param theta|xi] [--lambda L]
 *               [--out FILE] [--format csv|json]
 *   synthesize  A.json B.json [--energy E] [--hbar H] [--out FILE]
 *   evolve      A.json B.json [--energy E] [--hbar H] [--samples N]
 *               [--lambda L] [--hamiltonian FILE] [--out FILE]
 *               [--format csv|json]
 *   verify      A.json B.json [--energy E] [--hbar H] [--samples N]
 *               [--perturb P] [--out FILE]
 *
 * Exit codes:
 *   0  success (verify: all three verdicts true)
 *   1  verify: at least one verdict false
 *   2  unreadable/malformed input file (message names the file)
 *   3  dimension mismatch between inputs
 *   4  endpoint rays antipodal or identical
 *   5  non-positive energy scale
 *   6  --perturb used with dimension != 2
 *   7  too few samples (< 2; < 100 for verify)
 *  64  command-line usage error
 *  70  unexpected internal error
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeo/io.hpp"
#include "qgeo/qgeo.hpp"

namespace {

constexpr int kExitVerdictFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitEndpoints = 4;
constexpr int kExitEnergy = 5;
constexpr int kExitPerturbDim = 6;
constexpr int kExitSamples = 7;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

int exit_code_for(const qgeo::error& e) {
  switch (e.kind()) {
    case qgeo::errc::invalid_argument:
      return kExitParse;  // file-content problems surface as InvalidArgument
    case qgeo::errc::dimension_mismatch:
    case qgeo::errc::dimension_too_small:
      return kExitDimension;
    case qgeo::errc::antipodal_states:
    case qgeo::errc::identical_rays:
      return kExitEndpoints;
    case qgeo::errc::non_positive_energy:
      return kExitEnergy;
    case qgeo::errc::samples_too_few:
      return kExitSamples;
    default:
      return kExitInternal;
  }
}

/// Options shared by the subcommands.
struct RunConfig {
  double lambda = 2.0;
  double hbar = 1.0;
  double energy = 1.0;
  long samples = 1000;
  std::string output_path;   // empty = stdout
  std::string format = "csv";
};

/// Writes `text` to config.output_path, or to stdout when no path is set.
void emit(const RunConfig& config, const std::string& text) {
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  qgeo::detail::require(out.good(), qgeo::errc::invalid_argument,
                        "cannot open output file '" + config.output_path +
                            "'");
  out << text;
  qgeo::detail::require(out.good(), qgeo::errc::invalid_argument,
                        "failed writing output file '" + config.output_path +
                            "'");
}

std::string render_table(const RunConfig& config, const qgeo::io::Table& t) {
  if (config.format == "json") return qgeo::io::table_to_json(t).dump(2) + "\n";
  std::ostringstream os;
  qgeo::io::write_csv(os, t);
  return os.str();
}

/// k-th of n uniform samples of [0, hi], with the last landing on hi exactly.
double linspace_at(double hi, std::size_t k, std::size_t n) {
  return (k + 1 == n)
             ? hi
             : hi * static_cast<double>(k) / static_cast<double>(n - 1);
}

void append_state_columns(std::vector<double>& row, const qgeo::PureState& s) {
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    row.push_back(s[i].real());
    row.push_back(s[i].imag());
  }
  if (s.dim() == 2) {
    const qgeo::BlochPoint p = qgeo::to_bloch(s);
    row.push_back(p.x);
    row.push_back(p.y);
    row.push_back(p.z);
  }
}

std::vector<std::string> table_columns(const std::vector<std::string>& params,
                                       Eigen::Index dim) {
  std::vector<std::string> cols = params;
  for (Eigen::Index i = 0; i < dim; ++i) {
    cols.push_back("re" + std::to_string(i));
    cols.push_back("im" + std::to_string(i));
  }
  if (dim == 2) {
    cols.push_back("bx");
    cols.push_back("by");
    cols.push_back("bz");
  }
  cols.push_back("cum_length");
  return cols;
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& metric, const RunConfig& config) {
  const qgeo::PureState a = qgeo::io::load_state(path_a);
  const qgeo::PureState b = qgeo::io::load_state(path_b);
  const qgeo::MetricConvention conv{config.lambda};
  const double d = (metric == "wootters") ? qgeo::wootters_distance(a, b, conv)
                                          : qgeo::fs_distance(a, b, conv);
  std::printf("%.12f\n", d);
  return 0;
}

int run_geodesic(const std::string& path_a, const std::string& path_b,
                 const std::string& param, const RunConfig& config) {
  qgeo::detail::require(config.samples >= 2, qgeo::errc::samples_too_few,
                        "geodesic sampling needs at least 2 samples");
  const qgeo::PureState a = qgeo::io::load_state(path_a);
  const qgeo::PureState b = qgeo::io::load_state(path_b);
  const qgeo::GeodesicSpec spec = qgeo::make_geodesic(a, b);
  const qgeo::MetricConvention conv{config.lambda};
  const auto n = static_cast<std::size_t>(config.samples);
  const bool by_theta = (param == "theta");

  qgeo::io::Table table;
  table.columns = table_columns(
      by_theta ? std::vector<std::string>{"theta", "xi"}
               : std::vector<std::string>{"xi", "theta"},
      a.dim());
  double cum = 0.0;
  std::optional<qgeo::PureState> prev;
  for (std::size_t k = 0; k < n; ++k) {
    double theta, xi;
    qgeo::PureState s = [&] {
      if (by_theta) {
        theta = linspace_at(std::numbers::pi, k, n);
        xi = qgeo::xi_of_theta(theta);
        return qgeo::point_theta(spec, theta);
      }
      xi = linspace_at(1.0, k, n);
      theta = qgeo::theta_of_xi(xi);
      return qgeo::point_xi(spec, xi);
    }();
    if (prev) cum += qgeo::wootters_distance(*prev, s, conv);
    std::vector<double> row;
    row.push_back(by_theta ? theta : xi);
    row.push_back(by_theta ? xi : theta);
    append_state_columns(row, s);
    row.push_back(cum);
    table.rows.push_back(std::move(row));
    prev = std::move(s);
  }
  emit(config, render_table(config, table));
  return 0;
}

int run_synthesize(const std::string& path_a, const std::string& path_b,
                   const RunConfig& config) {
  const qgeo::PureState a = qgeo::io::load_state(path_a);
  const qgeo::PureState b = qgeo::io::load_state(path_b);
  const qgeo::OptimalPlan plan =
      qgeo::synthesize(a, b, config.energy, config.hbar);
  emit(config, qgeo::io::hamiltonian_to_json(plan.hamiltonian, plan.hbar,
                                             plan.t_min)
                       .dump(2) +
                   "\n");
  return 0;
}

/// Trajectory table under the synthesized optimal-speed generator, with the
/// exact closed-form states and time-parameter maps.
qgeo::io::Table evolve_optimal(const qgeo::PureState& a,
                               const qgeo::PureState& b,
                               const RunConfig& config) {
  const qgeo::OptimalPlan plan =
      qgeo::synthesize(a, b, config.energy, config.hbar);
  const qgeo::MetricConvention conv{config.lambda};
  const auto n = static_cast<std::size_t>(config.samples);

  qgeo::io::Table table;
  table.columns = table_columns({"t", "xi", "eta"}, a.dim());
  double cum = 0.0;
  std::optional<qgeo::PureState> prev;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = linspace_at(plan.t_min, k, n);
    qgeo::PureState s = qgeo::trajectory_closed_form(plan, t);
    if (prev) cum += qgeo::wootters_distance(*prev, s, conv);
    std::vector<double> row{t, qgeo::xi_of_t(plan, t), qgeo::eta_of_t(plan, t)};
    append_state_columns(row, s);
    row.push_back(cum);
    table.rows.push_back(std::move(row));
    prev = std::move(s);
  }
  return table;
}

/// Trajectory table under a user-supplied generator.  The duration comes
/// from the file's t_min sidecar; xi/eta are the geodesic-reference
/// parameters at matched ray-space arclength (exact when the file holds the
/// optimal generator for (a, b); monotone and capped at eta = pi otherwise).
qgeo::io::Table evolve_with_file(const qgeo::PureState& a,
                                 const qgeo::PureState& b,
                                 const std::string& hamiltonian_path,
                                 const RunConfig& config) {
  const qgeo::io::HamiltonianFile hf =
      qgeo::io::load_hamiltonian(hamiltonian_path);
  qgeo::detail::require(hf.t_min.has_value(), qgeo::errc::invalid_argument,
                        "file '" + hamiltonian_path +
                            "' has no \"t_min\" field; cannot choose an "
                            "evolution duration");
  qgeo::detail::require(*hf.t_min > 0.0, qgeo::errc::invalid_argument,
                        "file '" + hamiltonian_path +
                            "' has a non-positive \"t_min\"");
  qgeo::detail::require(hf.hamiltonian.dim() == a.dim(),
                        qgeo::errc::dimension_mismatch,
                        "Hamiltonian dimension differs from the states");
  const double theta_fs = qgeo::gauge_fix(a, b).theta_fs;
  const qgeo::MetricConvention conv{config.lambda};
  const auto n = static_cast<std::size_t>(config.samples);

  qgeo::io::Table table;
  table.columns = table_columns({"t", "xi", "eta"}, a.dim());
  double cum = 0.0;        // in the caller's lambda units (CSV column)
  double arclen = 0.0;     // in lambda = 2 units (drives the eta map)
  std::optional<qgeo::PureState> prev;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = linspace_at(*hf.t_min, k, n);
    qgeo::PureState s = qgeo::propagate(hf.hamiltonian, a, t, hf.hbar);
    if (prev) {
      cum += qgeo::wootters_distance(*prev, s, conv);
      arclen += qgeo::wootters_distance(*prev, s, qgeo::MetricConvention{2.0});
    }
    const double eta =
        (arclen >= theta_fs)
            ? std::numbers::pi
            : 2.0 * std::atan2(std::sin(arclen / 2.0),
                               std::sin((theta_fs - arclen) / 2.0));
    std::vector<double> row{t, qgeo::xi_of_theta(eta), eta};
    append_state_columns(row, s);
    row.push_back(cum);
    table.rows.push_back(std::move(row));
    prev = std::move(s);
  }
  return table;
}

int run_evolve(const std::string& path_a, const std::string& path_b,
               const std::string& hamiltonian_path, const RunConfig& config) {
  qgeo::detail::require(config.samples >= 2, qgeo::errc::samples_too_few,
                        "evolution needs at least 2 samples");
  const qgeo::PureState a = qgeo::io::load_state(path_a);
  const qgeo::PureState b = qgeo::io::load_state(path_b);
  const qgeo::io::Table table =
      hamiltonian_path.empty() ? evolve_optimal(a, b, config)
                               : evolve_with_file(a, b, hamiltonian_path,
                                                  config);
  emit(config, render_table(config, table));
  return 0;
}

int run_verify(const std::string& path_a, const std::string& path_b,
               std::optional<double> perturb, const RunConfig& config) {
  qgeo::detail::require(config.samples >= 100, qgeo::errc::samples_too_few,
                        "verification needs at least 100 samples");
  const qgeo::PureState a = qgeo::io::load_state(path_a);
  const qgeo::PureState b = qgeo::io::load_state(path_b);
  const qgeo::OptimalPlan plan =
      qgeo::synthesize(a, b, config.energy, config.hbar);
  const auto n = static_cast<std::size_t>(config.samples);

  qgeo::VerificationReport report;
  if (perturb) {
    if (a.dim() != 2) {
      std::cerr << "error: --perturb adds a sigma_z admixture and is defined "
                   "for dimension 2 only\n";
      return kExitPerturbDim;
    }
    Eigen::MatrixXcd sz(2, 2);
    sz << 1.0, 0.0, 0.0, -1.0;
    const qgeo::Hamiltonian perturbed = qgeo::make_hamiltonian(
        plan.hamiltonian.matrix() + (*perturb * config.energy) * sz);
    std::vector<double> ts(n);
    std::vector<qgeo::PureState> states;
    states.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      ts[k] = linspace_at(plan.t_min, k, n);
      states.push_back(qgeo::propagate(perturbed, a, ts[k], config.hbar));
    }
    report = qgeo::verify_curve(
        qgeo::SampledCurve(std::move(ts), std::move(states)), perturbed,
        config.hbar);
  } else {
    report = qgeo::verify(plan, n);
  }

  emit(config, qgeo::io::report_to_json(report).dump(2) + "\n");
  return report.verdicts.all() ? 0 : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of pure-state quantum evolution: distances, "
               "geodesics, optimal-speed generators, and geodesicity "
               "verification"};
  app.require_subcommand(1);

  RunConfig config;
  std::string path_a, path_b;
  std::string metric = "fs";
  std::string param = "theta";
  std::string hamiltonian_path;
  double perturb_value = 0.0;

  const auto add_states = [&](CLI::App* cmd) {
    cmd->add_option("state_a", path_a, "state JSON file (start)")->required();
    cmd->add_option("state_b", path_b, "state JSON file (end)")->required();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.output_path,
                    "output file (default: stdout)");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };
  const auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", config.lambda, "metric scale (> 0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_physics = [&](CLI::App* cmd) {
    cmd->add_option("--energy", config.energy, "energy scale E")
        ->capture_default_str();
    cmd->add_option("--hbar", config.hbar, "action scale hbar (> 0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_samples = [&](CLI::App* cmd) {
    cmd->add_option("--samples", config.samples, "number of sample rows")
        ->capture_default_str();
  };

  CLI::App* distance =
      app.add_subcommand("distance", "ray-space distance between two states");
  add_states(distance);
  add_lambda(distance);
  distance->add_option("--metric", metric, "distance kind")
      ->check(CLI::IsMember({"fs", "wootters"}))
      ->capture_default_str();

  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "sample the analytic geodesic between two states");
  add_states(geodesic);
  add_lambda(geodesic);
  add_samples(geodesic);
  add_out(geodesic);
  add_format(geodesic);
  geodesic->add_option("--param", param, "sampling parameter")
      ->check(CLI::IsMember({"theta", "xi"}))
      ->capture_default_str();

  CLI::App* synthesize = app.add_subcommand(
      "synthesize", "optimal-speed generator for an endpoint pair");
  add_states(synthesize);
  add_physics(synthesize);
  add_out(synthesize);

  CLI::App* evolve = app.add_subcommand(
      "evolve", "trajectory table under the optimal (or a supplied) generator");
  add_states(evolve);
  add_physics(evolve);
  add_samples(evolve);
  add_lambda(evolve);
  add_out(evolve);
  add_format(evolve);
  evolve->add_option("--hamiltonian", hamiltonian_path,
                     "Hamiltonian JSON file (duration from its t_min)");

  CLI::App* verify = app.add_subcommand(
      "verify", "three geodesicity verdicts for the optimal trajectory");
  add_states(verify);
  add_physics(verify);
  add_samples(verify);
  add_out(verify);
  CLI::Option* perturb_opt =
      verify->add_option("--perturb", perturb_value,
                         "sigma_z admixture strength (units of E; d = 2 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;  // keep usage errors off verdict codes
  }

  try {
    if (distance->parsed()) return run_distance(path_a, path_b, metric, config);
    if (geodesic->parsed()) return run_geodesic(path_a, path_b, param, config);
    if (synthesize->parsed()) return run_synthesize(path_a, path_b, config);
    if (evolve->parsed())
      return run_evolve(path_a, path_b, hamiltonian_path, config);
    if (verify->parsed())
      return run_verify(path_a, path_b,
                        perturb_opt->count() > 0
                            ? std::optional<double>(perturb_value)
                            : std::nullopt,
                        config);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const qgeo::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
