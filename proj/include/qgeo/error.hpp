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
 * Error taxonomy shared by every qgeo module.
 *
 * All failure modes surface as qgeo::error, a std::runtime_error carrying a
 * machine-readable qgeo::errc kind.  Callers that only want a message can
 * treat it as a runtime_error; the CLI maps kinds onto exit codes.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qgeo {

/// Machine-readable failure kinds.  One enumerator per documented failure
/// path; `internal` covers invariant violations that indicate a bug rather
/// than bad input.
enum class errc {
  zero_vector,           ///< input vector has (near-)zero norm
  dimension_too_small,   ///< state dimension < 2
  dimension_mismatch,    ///< operands live in different dimensions
  antipodal_states,      ///< orthogonal endpoint rays (geodesic non-unique)
  identical_rays,        ///< endpoint rays coincide
  param_out_of_range,    ///< curve/evolution parameter outside its domain
  index_out_of_range,    ///< sample index outside the valid interior
  curve_too_coarse,      ///< sample spacing too large for finite differences
  curve_too_short,       ///< fewer samples than the operation requires
  non_positive_energy,   ///< energy scale E <= 0
  generator_mismatch,    ///< curve inconsistent with the claimed Hamiltonian
  degenerate_curve,      ///< zero ray-space speed makes a ratio 0/0
  orthogonal_endpoints,  ///< open-curve phase undefined for |<i|f>| ~ 0
  samples_too_few,       ///< requested sample count below the minimum
  invalid_argument,      ///< malformed input not covered above
  internal,              ///< broken internal invariant (bug)
};

/// Human-readable tag for an errc (stable, used in messages and tests).
inline const char* errc_name(errc k) {
  switch (k) {
    case errc::zero_vector: return "ZeroVector";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::antipodal_states: return "AntipodalStates";
    case errc::identical_rays: return "IdenticalRays";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::curve_too_coarse: return "CurveTooCoarse";
    case errc::curve_too_short: return "CurveTooShort";
    case errc::non_positive_energy: return "NonPositiveEnergy";
    case errc::generator_mismatch: return "GeneratorMismatch";
    case errc::degenerate_curve: return "DegenerateCurve";
    case errc::orthogonal_endpoints: return "OrthogonalEndpoints";
    case errc::samples_too_few: return "SamplesTooFew";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

/// Exception type thrown by every qgeo operation on failure.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& message)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + message),
        kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

namespace detail {

/// Throws qgeo::error(kind, message) unless cond holds.
inline void require(bool cond, errc kind, const std::string& message) {
  if (!cond) throw error(kind, message);
}

}  // namespace detail

}  // namespace qgeo
