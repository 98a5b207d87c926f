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
 * Fubini-Study metric evaluation on sampled curves, finite distances between
 * pure states, and discrete path-length integration.
 *
 * Distances carry a positive scale lambda (default 2, which makes ray space
 * for a qubit the unit Bloch sphere):
 *
 *     fs_distance(a, b)       = lambda * sqrt(1 - |<a|b>|^2)
 *     wootters_distance(a, b) = lambda * arccos(|<a|b>|)
 *
 * The two agree to third order in the separation; Wootters is the exact
 * geodesic (great-circle) distance, so path lengths are integrated by
 * chaining Wootters segments, which is exactly reparametrization-invariant
 * on the samples and free of differentiation noise.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qgeo/error.hpp"
#include "qgeo/state.hpp"

namespace qgeo {

/// Metric scale convention.  lambda > 0; lambda = 2 is the unit-Bloch-sphere
/// normalization used throughout unless a caller overrides it.
struct MetricConvention {
  double lambda = 2.0;
};

inline MetricConvention default_convention() { return MetricConvention{}; }

namespace detail {

inline void check_convention(const MetricConvention& conv) {
  require(conv.lambda > 0.0, errc::invalid_argument,
          "metric scale lambda must be positive");
}

}  // namespace detail

/// One finite-difference evaluation of the pulled-back metric at a curve
/// sample:
///   gamma = Re<dpsi|dpsi>,  beta = Re(-i<psi|dpsi>),  g = lambda^2 (gamma - beta^2),
/// all per unit parameter squared.  beta is real only when <psi|dpsi> is
/// purely imaginary (true for horizontal curves); beta_imag records the
/// discarded imaginary part so callers can detect ill-gauged curves instead
/// of silently trusting g.
struct MetricSample {
  double gamma = 0.0;
  double beta = 0.0;
  double g = 0.0;
  double beta_imag = 0.0;  ///< Im(-i<psi|dpsi>); |.| > 1e-8 is suspect

  /// True when the discarded imaginary part of beta is above noise level,
  /// i.e. the curve's gauge wobbles too fast for the stored beta to be
  /// trustworthy.
  bool beta_imag_suspect() const { return std::abs(beta_imag) > 1e-8; }
};

/// A discrete curve of states indexed by a strictly increasing parameter
/// (time, theta, xi, ...).  Uniform spacing is not required.
class SampledCurve {
 public:
  /// Builds a curve from matching parameter/state arrays.
  ///
  /// Errors: InvalidArgument unless there are >= 2 points, the params are
  /// strictly increasing, the arrays match in length, and all states share
  /// one dimension.
  SampledCurve(std::vector<double> params, std::vector<PureState> states)
      : params_(std::move(params)), states_(std::move(states)) {
    detail::require(params_.size() == states_.size(), errc::invalid_argument,
                    "parameter and state arrays differ in length");
    detail::require(params_.size() >= 2, errc::invalid_argument,
                    "a sampled curve needs at least two points");
    for (std::size_t k = 0; k + 1 < params_.size(); ++k)
      detail::require(params_[k] < params_[k + 1], errc::invalid_argument,
                      "curve parameters must be strictly increasing");
    for (const PureState& s : states_)
      detail::require(s.dim() == states_.front().dim(),
                      errc::invalid_argument,
                      "all states on a curve must share one dimension");
  }

  std::size_t size() const { return params_.size(); }
  Eigen::Index dim() const { return states_.front().dim(); }
  double param(std::size_t k) const { return params_[k]; }
  const PureState& state(std::size_t k) const { return states_[k]; }
  const PureState& front() const { return states_.front(); }
  const PureState& back() const { return states_.back(); }
  double param_range() const { return params_.back() - params_.front(); }

 private:
  std::vector<double> params_;
  std::vector<PureState> states_;
};

/// Fubini-Study distance lambda * sqrt(1 - |<a|b>|^2), in [0, lambda].
///
/// Errors: DimensionMismatch.
inline double fs_distance(const PureState& a, const PureState& b,
                          const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  const double m = overlap_mag(a, b);
  return conv.lambda * std::sqrt(std::max(0.0, 1.0 - m * m));
}

/// Wootters distance lambda * arccos(|<a|b>|), in [0, lambda*pi/2].
/// This is the exact geodesic distance between the two rays.
///
/// Errors: DimensionMismatch.
inline double wootters_distance(const PureState& a, const PureState& b,
                                const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  return conv.lambda * std::acos(overlap_mag(a, b));
}

namespace detail {

/// Central-difference tangent (state(k+1) - state(k-1)) / (param span).
inline Eigen::VectorXcd central_difference(const SampledCurve& curve,
                                           std::size_t k) {
  const double span = curve.param(k + 1) - curve.param(k - 1);
  return (curve.state(k + 1).amplitudes() - curve.state(k - 1).amplitudes()) /
         span;
}

}  // namespace detail

/// Evaluates the single-parameter Fubini-Study metric at an interior sample
/// by central finite differences on the neighboring samples.
///
/// Errors: IndexOutOfRange unless 0 < index < size-1; CurveTooCoarse when the
/// local spacing exceeds 1e-2 of the parameter range (the finite difference
/// would not resolve the curve).
inline MetricSample metric_at(const SampledCurve& curve, std::size_t index,
                              const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  detail::require(index > 0 && index + 1 < curve.size(),
                  errc::index_out_of_range,
                  "metric_at needs an interior sample index");
  const double range = curve.param_range();
  const double spacing = std::max(curve.param(index) - curve.param(index - 1),
                                  curve.param(index + 1) - curve.param(index));
  detail::require(spacing <= 1e-2 * range, errc::curve_too_coarse,
                  "local spacing exceeds 1e-2 of the parameter range");

  const Eigen::VectorXcd dpsi = detail::central_difference(curve, index);
  const complexd psi_dot =
      curve.state(index).amplitudes().dot(dpsi);  // <psi|dpsi>
  const complexd beta_c = complexd(0.0, -1.0) * psi_dot;  // -i<psi|dpsi>

  MetricSample out;
  out.gamma = dpsi.squaredNorm();  // Re<dpsi|dpsi> (exactly real)
  out.beta = beta_c.real();
  out.beta_imag = beta_c.imag();
  out.g = conv.lambda * conv.lambda * (out.gamma - out.beta * out.beta);
  return out;
}

/// Discrete ray-space length of a sampled curve: the sum of Wootters segment
/// distances lambda*arccos|<psi_k|psi_{k+1}>|.  Non-negative; never less than
/// the direct Wootters distance of the endpoints (triangle inequality).  A
/// two-point curve degenerates to that single segment.
///
/// Errors: CurveTooShort (fewer than 2 points cannot form a segment; the
/// SampledCurve constructor already enforces this, so the guard here protects
/// only hand-rolled callers of the segment loop).
inline double path_length(const SampledCurve& curve,
                          const MetricConvention& conv = {}) {
  detail::check_convention(conv);
  detail::require(curve.size() >= 2, errc::curve_too_short,
                  "path length needs at least one segment");
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < curve.size(); ++k)
    total += wootters_distance(curve.state(k), curve.state(k + 1), conv);
  return total;
}

}  // namespace qgeo
