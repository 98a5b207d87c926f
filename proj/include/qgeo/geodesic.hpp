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
 * The analytic geodesic family between two pure-state rays, in both of its
 * standard parametrizations, with the maps between the parameters, the
 * analytic length, and the closed-form pulled-back metric.
 *
 * For endpoints |A>, |B> with a = |<B|A>| in (0,1) and unit phase
 * e^{i phi} = <B|A>/|<B|A>|, the family
 *
 *   |psi(xi)>    = N_xi    [ (1-xi) |A> + e^{i phi} xi |B> ],     xi in [0,1]
 *   |psi(theta)> = N_theta [ cos(theta/2) |A>
 *                            + e^{i phi} sin(theta/2) |B> ],   theta in [0,pi]
 *
 * with N_xi = [1 - 2 xi (1-xi)(1-a)]^{-1/2} and
 * N_theta = [1 + a sin(theta)]^{-1/2}, traces the unique minimal ray-space
 * path from the ray of A to the ray of B.  Both parametrizations cover the
 * same ray path; xi_of_theta / theta_of_xi convert between them.  Along the
 * curve the pulled-back metric has the closed form
 *
 *   g(theta) = lambda^2 (1 - a^2) / (4 [1 + a sin(theta)]^2),
 *
 * and the total length is lambda * arccos(a), independent of parametrization.
 */

#pragma once

#include <cmath>
#include <numbers>

#include "qgeo/error.hpp"
#include "qgeo/metric.hpp"
#include "qgeo/state.hpp"

namespace qgeo {

/// The data defining one analytic geodesic family: the two endpoint states,
/// the overlap magnitude a = |<b|a>| in (0,1), and the unit phase
/// <b|a>/|<b|a>| that aligns b with a inside the superpositions.
struct GeodesicSpec {
  PureState a;
  PureState b;
  double overlap_mag;  ///< a = |<b|a>|, strictly inside (0, 1)
  complexd phase;      ///< e^{i phi} = <b|a>/|<b|a>|, unit modulus
};

/// Builds the geodesic family between two states.
///
/// Errors: AntipodalStates if |<b|a>| <= 1e-12; IdenticalRays if
/// |<b|a>| >= 1 - 1e-12; DimensionMismatch.
inline GeodesicSpec make_geodesic(const PureState& a, const PureState& b) {
  const complexd o_ba = overlap(b, a);  // <b|a>
  const double m = std::min(1.0, std::abs(o_ba));
  detail::require(m > 1e-12, errc::antipodal_states,
                  "no unique geodesic between orthogonal rays");
  detail::require(m < 1.0 - 1e-12, errc::identical_rays,
                  "endpoint rays coincide; geodesic is a point");
  return GeodesicSpec{a, b, m, o_ba / std::abs(o_ba)};
}

namespace detail {

/// Accepts values a hair outside [lo, hi] (relative slack ~1e-12, so linspace
/// endpoint rounding never trips the range check) and clamps them in.
inline double clamp_param(double x, double lo, double hi, errc kind,
                          const char* what) {
  const double slack = 1e-12 * std::max(1.0, std::abs(hi));
  require(x >= lo - slack && x <= hi + slack, kind, what);
  return std::min(hi, std::max(lo, x));
}

}  // namespace detail

/// The geodesic point at affine parameter xi in [0, 1].  xi = 0 returns a
/// exactly; xi = 1 returns phase*b (the definite-vector limit convention).
///
/// Errors: ParamOutOfRange.
inline PureState point_xi(const GeodesicSpec& spec, double xi) {
  xi = detail::clamp_param(xi, 0.0, 1.0, errc::param_out_of_range,
                           "xi must lie in [0, 1]");
  if (xi == 0.0) return spec.a;
  if (xi == 1.0) return normalize(spec.phase * spec.b.amplitudes());
  const double norm2 = 1.0 - 2.0 * xi * (1.0 - xi) * (1.0 - spec.overlap_mag);
  const Eigen::VectorXcd raw = (1.0 - xi) * spec.a.amplitudes() +
                               (spec.phase * xi) * spec.b.amplitudes();
  return normalize(raw / std::sqrt(norm2));
}

/// The geodesic point at angle parameter theta in [0, pi].  theta = 0 returns
/// a exactly; theta = pi returns phase*b.
///
/// Errors: ParamOutOfRange.
inline PureState point_theta(const GeodesicSpec& spec, double theta) {
  theta = detail::clamp_param(theta, 0.0, std::numbers::pi,
                              errc::param_out_of_range,
                              "theta must lie in [0, pi]");
  if (theta == 0.0) return spec.a;
  if (theta == std::numbers::pi)
    return normalize(spec.phase * spec.b.amplitudes());
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const double norm2 = 1.0 + spec.overlap_mag * std::sin(theta);
  const Eigen::VectorXcd raw =
      c * spec.a.amplitudes() + (spec.phase * s) * spec.b.amplitudes();
  return normalize(raw / std::sqrt(norm2));
}

/// Parameter map theta -> xi: tan(theta/2) / (1 + tan(theta/2)), evaluated in
/// the pole-free form sin(theta/2) / (cos(theta/2) + sin(theta/2)).
/// Monotone increasing; xi(0) = 0, xi(pi) = 1 (limit convention).
///
/// Errors: ParamOutOfRange.
inline double xi_of_theta(double theta) {
  theta = detail::clamp_param(theta, 0.0, std::numbers::pi,
                              errc::param_out_of_range,
                              "theta must lie in [0, pi]");
  if (theta == std::numbers::pi) return 1.0;
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return s / (c + s);
}

/// Inverse parameter map xi -> theta: 2*atan2(xi, 1-xi) on [0, pi].
/// theta(0) = 0, theta(1/2) = pi/2, theta(1) = pi, all exact.
///
/// Errors: ParamOutOfRange.
inline double theta_of_xi(double xi) {
  xi = detail::clamp_param(xi, 0.0, 1.0, errc::param_out_of_range,
                           "xi must lie in [0, 1]");
  return 2.0 * std::atan2(xi, 1.0 - xi);
}

/// Exact ray-space length of the geodesic: lambda * arccos(a).  Equals the
/// Wootters distance between the endpoints.
inline double analytic_length(const GeodesicSpec& spec,
                              const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  return conv.lambda * std::acos(spec.overlap_mag);
}

/// Closed-form pulled-back metric along the theta parametrization:
/// lambda^2 (1 - a^2) / (4 [1 + a sin(theta)]^2).  Positive for a < 1 and
/// symmetric about theta = pi/2.
///
/// Errors: ParamOutOfRange.
inline double metric_closed_form(const GeodesicSpec& spec, double theta,
                                 const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  theta = detail::clamp_param(theta, 0.0, std::numbers::pi,
                              errc::param_out_of_range,
                              "theta must lie in [0, pi]");
  const double a = spec.overlap_mag;
  const double denom = 1.0 + a * std::sin(theta);
  return conv.lambda * conv.lambda * (1.0 - a * a) / (4.0 * denom * denom);
}

/// Uniform theta-sampling of the geodesic as a SampledCurve with n >= 2
/// points (parameter = theta).  Endpoints land exactly on theta = 0 and pi.
inline SampledCurve sample_geodesic_theta(const GeodesicSpec& spec,
                                          std::size_t n) {
  detail::require(n >= 2, errc::curve_too_short,
                  "sampling a curve needs at least two points");
  std::vector<double> params(n);
  std::vector<PureState> states;
  states.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta =
        (k + 1 == n) ? std::numbers::pi
                     : std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(n - 1);
    params[k] = theta;
    states.push_back(point_theta(spec, theta));
  }
  return SampledCurve(std::move(params), std::move(states));
}

}  // namespace qgeo
