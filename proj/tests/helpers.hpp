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
 * Shared fixtures for the test suite: seeded random states, canonical qubit
 * rays, and small comparison utilities.  Every generator takes an explicit
 * engine so individual test cases stay reproducible in isolation.
 */

#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <utility>

#include <Eigen/Dense>

#include "qgeo/error.hpp"
#include "qgeo/state.hpp"

namespace qgeo_test {

/// Runs f and reports which qgeo::errc it threw, if any.  Lets tests assert
/// on the machine-readable failure kind instead of message text.
template <typename F>
std::optional<qgeo::errc> error_kind_of(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const qgeo::error& e) {
    return e.kind();
  }
}

using complexd = std::complex<double>;

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
inline qgeo::PureState haar_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = complexd(gauss(rng), gauss(rng));
  return qgeo::normalize(v);
}

/// Pair of Haar-random states whose overlap magnitude lies in [lo, hi].
/// Rejection sampling; the window keeps tests away from the identical-ray
/// and antipodal singular configurations.
inline std::pair<qgeo::PureState, qgeo::PureState> random_pair(
    Eigen::Index dim, std::mt19937_64& rng, double lo = 0.05, double hi = 0.95) {
  for (;;) {
    qgeo::PureState a = haar_state(dim, rng);
    qgeo::PureState b = haar_state(dim, rng);
    const double m = qgeo::overlap_mag(a, b);
    if (m >= lo && m <= hi) return {std::move(a), std::move(b)};
  }
}

/// State with amplitudes (cos(polar/2), e^{i azimuth} sin(polar/2)):
/// the qubit ray whose Bloch vector has the given spherical angles.
inline qgeo::PureState bloch_ray(double polar, double azimuth) {
  Eigen::VectorXcd v(2);
  v[0] = std::cos(polar / 2.0);
  v[1] = std::polar(std::sin(polar / 2.0), azimuth);
  return qgeo::normalize(v);
}

inline qgeo::PureState ket0() { return qgeo::basis_state(2, 0); }
inline qgeo::PureState ket1() { return qgeo::basis_state(2, 1); }

inline qgeo::PureState ket_plus() {
  Eigen::VectorXcd v(2);
  v << 1.0, 1.0;
  return qgeo::normalize(v);
}

inline qgeo::PureState ket_i() {
  Eigen::VectorXcd v(2);
  v << complexd(1.0, 0.0), complexd(0.0, 1.0);
  return qgeo::normalize(v);
}

/// Pauli matrices as ready-to-wrap Eigen blocks.
inline Eigen::MatrixXcd pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Eigen::MatrixXcd pauli_y() {
  Eigen::MatrixXcd m(2, 2);
  m << complexd(0, 0), complexd(0, -1), complexd(0, 1), complexd(0, 0);
  return m;
}

inline Eigen::MatrixXcd pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// Largest entrywise modulus of the difference between two vectors.
inline double max_abs_diff(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  return (u - v).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const qgeo::PureState& u, const qgeo::PureState& v) {
  return max_abs_diff(u.amplitudes(), v.amplitudes());
}

/// Largest entrywise modulus of the difference between two matrices.
inline double max_abs_diff(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  return (u - v).cwiseAbs().maxCoeff();
}

/// Distance between the rays spanned by two unit vectors: 0 iff they agree
/// up to a global phase.
inline double ray_distance(const qgeo::PureState& u, const qgeo::PureState& v) {
  return std::sqrt(std::max(0.0, 1.0 - std::norm(qgeo::overlap(u, v))));
}

}  // namespace qgeo_test
