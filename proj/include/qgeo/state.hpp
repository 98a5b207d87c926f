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
 * Pure quantum states, rays, overlaps, gauge fixing, and the Bloch-sphere
 * chart for dimension two.
 *
 * A PureState is a unit-norm complex vector; its physical content is the ray
 * (the equivalence class under a global phase).  gauge_fix picks a canonical
 * representative pair for two non-orthogonal, non-identical rays: it rephases
 * the second state so that the overlap becomes
 *
 *     <a|b'> = exp(-i*theta_fs/2) * cos(theta_fs/2),
 *
 * with theta_fs = 2*arccos|<a|b>| the Fubini-Study angle between the rays.
 * This is the overlap-phase convention assumed by the analytic geodesic
 * family and by optimal-speed Hamiltonian synthesis.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qgeo/error.hpp"

namespace qgeo {

using complexd = std::complex<double>;

/// A normalized pure state.  Immutable after construction; construct through
/// qgeo::normalize (or the convenience basis_state/from_amplitudes helpers),
/// which enforce the unit-norm invariant to 1e-12.
class PureState {
 public:
  /// Dimension of the underlying Hilbert space (>= 2).
  Eigen::Index dim() const { return amp_.size(); }

  /// The amplitude vector (unit norm).
  const Eigen::VectorXcd& amplitudes() const { return amp_; }

  complexd operator[](Eigen::Index k) const { return amp_(k); }

  /// True when | ||psi|| - 1 | <= tol.
  bool is_normalized(double tol = 1e-12) const {
    return std::abs(amp_.norm() - 1.0) <= tol;
  }

 private:
  friend PureState normalize(const Eigen::VectorXcd& raw);
  explicit PureState(Eigen::VectorXcd amp) : amp_(std::move(amp)) {}

  Eigen::VectorXcd amp_;
};

/// Normalizes a raw amplitude vector into a PureState, preserving direction.
///
/// Errors: ZeroVector if ||raw|| < 1e-14; DimensionTooSmall if raw has fewer
/// than two components.
inline PureState normalize(const Eigen::VectorXcd& raw) {
  detail::require(raw.size() >= 2, errc::dimension_too_small,
                  "state needs at least two amplitudes, got " +
                      std::to_string(raw.size()));
  const double n = raw.norm();
  detail::require(n >= 1e-14, errc::zero_vector,
                  "cannot normalize a (near-)zero amplitude vector");
  return PureState(raw / n);
}

/// Convenience overload for brace-initialized amplitude lists.
inline PureState normalize(const std::vector<complexd>& raw) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(raw.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k)
    v(k) = raw[static_cast<std::size_t>(k)];
  return normalize(v);
}

/// The k-th computational basis state of an n-dimensional space.
inline PureState basis_state(Eigen::Index n, Eigen::Index k) {
  detail::require(n >= 2, errc::dimension_too_small, "dimension must be >= 2");
  detail::require(k >= 0 && k < n, errc::index_out_of_range,
                  "basis index outside dimension");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(k) = 1.0;
  return normalize(v);
}

/// <a|b>, conjugate-linear in the first argument.
///
/// Errors: DimensionMismatch.
inline complexd overlap(const PureState& a, const PureState& b) {
  detail::require(a.dim() == b.dim(), errc::dimension_mismatch,
                  "overlap of states with dimensions " +
                      std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates lhs
}

/// A point on the unit Bloch sphere (chart for d = 2 only).
struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  /// |x^2 + y^2 + z^2 - 1|, for invariant checks.
  double radius_error() const { return std::abs(x * x + y * y + z * z - 1.0); }
};

/// Bloch-sphere coordinates of a qubit state:
/// (x, y, z) = (2 Re(c0* c1), 2 Im(c0* c1), |c0|^2 - |c1|^2).
/// Gauge-invariant: a global phase on s leaves the result unchanged.
///
/// Errors: DimensionMismatch if s.dim() != 2.
inline BlochPoint to_bloch(const PureState& s) {
  detail::require(s.dim() == 2, errc::dimension_mismatch,
                  "Bloch chart is defined for dimension 2, got " +
                      std::to_string(s.dim()));
  const complexd c0 = s[0], c1 = s[1];
  const complexd cross = std::conj(c0) * c1;
  return BlochPoint{2.0 * cross.real(), 2.0 * cross.imag(),
                    std::norm(c0) - std::norm(c1)};
}

/// A canonically rephased endpoint pair: <a|b> = e^{-i theta_fs/2} cos(theta_fs/2).
struct GaugeFixedPair {
  PureState a;      ///< first endpoint, untouched
  PureState b;      ///< second endpoint, rephased onto the canonical gauge
  double theta_fs;  ///< Fubini-Study angle 2 arccos|<a|b>|, in (0, pi)
};

/// Magnitude of the overlap clamped into [0, 1] (guards acos/sqrt against
/// representational noise just above 1).
inline double overlap_mag(const PureState& a, const PureState& b) {
  return std::min(1.0, std::abs(overlap(a, b)));
}

/// Rephases b so the pair satisfies the canonical overlap-phase convention.
/// The ray of b is unchanged; a is returned as-is.
///
/// Errors: AntipodalStates if |<a|b>| <= 1e-12 (the rephasing is undefined
/// and the geodesic between the rays is non-unique); IdenticalRays if
/// |<a|b>| >= 1 - 1e-12; DimensionMismatch.
inline GaugeFixedPair gauge_fix(const PureState& a, const PureState& b) {
  const complexd o = overlap(a, b);
  const double m = std::min(1.0, std::abs(o));
  detail::require(m > 1e-12, errc::antipodal_states,
                  "endpoint rays are orthogonal; gauge phase undefined");
  detail::require(m < 1.0 - 1e-12, errc::identical_rays,
                  "endpoint rays coincide; nothing to connect");
  const double theta = 2.0 * std::acos(m);
  // b' = e^{i delta} b with delta = -theta/2 - arg<a|b>, so that
  // <a|b'> = e^{-i theta/2} m.  Idempotent: a second application finds
  // arg<a|b'> = -theta/2 already and multiplies by unity.
  const complexd phase =
      std::polar(1.0, -theta / 2.0) * std::conj(o) / std::abs(o);
  return GaugeFixedPair{a, normalize(phase * b.amplitudes()), theta};
}

}  // namespace qgeo
