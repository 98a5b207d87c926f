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
 * Optimal-speed Hamiltonian synthesis, exact unitary propagation, the
 * closed-form optimal trajectory, and the time-to-geodesic parameter maps.
 *
 * Given endpoints |A>, |B> (non-orthogonal, distinct rays) and an energy
 * scale E, synthesize() returns the traceless Hermitian generator that
 * drives the ray of A to the ray of B along the geodesic in the minimum
 * time allowed by the energy dispersion,
 *
 *     T_min = hbar * theta_fs / (2 E),    theta_fs = 2 arccos|<A|B>|.
 *
 * With the endpoint pair in the canonical gauge (see state.hpp) and
 * |Bc> = e^{i theta_fs/2} |b_gauge_fixed>, the generator is the dyad form
 *
 *     H = i E / sin(theta_fs/2) * ( |Bc><A| - |A><Bc| ),
 *
 * which is well defined for any dimension (it acts on span{A, B} and is zero
 * on the orthogonal complement), has eigenvalues {+E, -E} on the span, zero
 * mean energy <A|H|A> = 0, and constant dispersion Delta E = E along the
 * whole trajectory.  The evolved state has the closed form
 *
 *     |psi(t)> = [cos(tau) - cot(theta_fs/2) sin(tau)] |A>
 *                + e^{i theta_fs/2} sin(tau)/sin(theta_fs/2) |b_gf>,
 *
 * tau = E t / hbar, which traces exactly the analytic geodesic family of
 * geodesic.hpp under the parameter maps xi_of_t / eta_of_t.
 */

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "qgeo/error.hpp"
#include "qgeo/geodesic.hpp"
#include "qgeo/state.hpp"

namespace qgeo {

/// A Hermitian generator (energy units).  Construct through
/// make_hamiltonian, which validates Hermiticity and symmetrizes away
/// representational noise so the invariant holds exactly.
class Hamiltonian {
 public:
  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  complexd trace() const { return m_.trace(); }

 private:
  friend Hamiltonian make_hamiltonian(const Eigen::MatrixXcd& m);
  explicit Hamiltonian(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  Eigen::MatrixXcd m_;
};

/// Validates and wraps a Hermitian matrix.  The input must equal its
/// conjugate transpose within 1e-12 entrywise (relative to the largest
/// entry); the stored matrix is the exact Hermitian part (m + m^dagger)/2.
///
/// Errors: InvalidArgument if not square or not Hermitian within tolerance.
inline Hamiltonian make_hamiltonian(const Eigen::MatrixXcd& m) {
  detail::require(m.rows() == m.cols() && m.rows() >= 2,
                  errc::invalid_argument,
                  "Hamiltonian must be a square matrix of dimension >= 2");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  detail::require(herm_err <= 1e-12 * scale, errc::invalid_argument,
                  "matrix is not Hermitian within 1e-12");
  return Hamiltonian((m + m.adjoint()) / 2.0);
}

/// Mean energy Re<s|H|s>.
inline double energy_mean(const Hamiltonian& h, const PureState& s) {
  detail::require(h.dim() == s.dim(), errc::dimension_mismatch,
                  "Hamiltonian and state dimensions differ");
  return s.amplitudes().dot(h.matrix() * s.amplitudes()).real();
}

/// Energy dispersion Delta E = sqrt(<H^2> - <H>^2) in the state s.
/// Zero exactly for eigenstates.
///
/// Errors: DimensionMismatch.
inline double energy_dispersion(const Hamiltonian& h, const PureState& s) {
  detail::require(h.dim() == s.dim(), errc::dimension_mismatch,
                  "Hamiltonian and state dimensions differ");
  const Eigen::VectorXcd hs = h.matrix() * s.amplitudes();
  const double h2 = hs.squaredNorm();                    // <H^2>
  const double h1 = s.amplitudes().dot(hs).real();       // <H>
  return std::sqrt(std::max(0.0, h2 - h1 * h1));
}

/// Dispersion of a two-level superposition alpha1|E1> + alpha2|E2> written
/// in the energy eigenbasis:
///
///   Delta E = (e2 - e1)/2 * sqrt(1 - ((p1 - p2)/(p1 + p2))^2),
///
/// p_i = |alpha_i|^2.  The amplitudes need not be normalized.  Maximal at
/// |alpha1| = |alpha2| with value (e2 - e1)/2; zero for eigenstates.
///
/// Errors: ZeroVector if both amplitudes vanish; InvalidArgument if e2 < e1.
inline double dispersion_in_energy_basis(double e1, double e2, complexd alpha1,
                                         complexd alpha2) {
  detail::require(e2 >= e1, errc::invalid_argument,
                  "energy levels must satisfy e2 >= e1");
  const double p1 = std::norm(alpha1), p2 = std::norm(alpha2);
  detail::require(p1 + p2 >= 1e-28, errc::zero_vector,
                  "both energy-basis amplitudes are zero");
  const double r = (p1 - p2) / (p1 + p2);
  return 0.5 * (e2 - e1) * std::sqrt(std::max(0.0, 1.0 - r * r));
}

/// An optimal-speed evolution plan: the canonically gauged endpoint pair,
/// the energy scale, the minimal transit time, and the generator.
struct OptimalPlan {
  GaugeFixedPair pair;      ///< endpoints in the canonical gauge
  double energy;            ///< E > 0 (energy units)
  double t_min;             ///< hbar * theta_fs / (2 E)
  Hamiltonian hamiltonian;  ///< dyad-form generator (see file comment)
  double hbar;              ///< action scale, default 1

  double theta_fs() const { return pair.theta_fs; }
};

/// Synthesizes the optimal-speed generator driving the ray of a to the ray
/// of b at energy scale `energy`.
///
/// Errors: NonPositiveEnergy; InvalidArgument for hbar <= 0;
/// AntipodalStates / IdenticalRays / DimensionMismatch from the gauge fix.
inline OptimalPlan synthesize(const PureState& a, const PureState& b,
                              double energy = 1.0, double hbar = 1.0) {
  detail::require(energy > 0.0, errc::non_positive_energy,
                  "energy scale must be positive");
  detail::require(hbar > 0.0, errc::invalid_argument,
                  "hbar must be positive");
  GaugeFixedPair pair = gauge_fix(a, b);
  const double half = pair.theta_fs / 2.0;
  const double s = std::sin(half);

  const Eigen::VectorXcd& va = pair.a.amplitudes();
  const Eigen::VectorXcd vb = std::polar(1.0, half) * pair.b.amplitudes();
  const Eigen::MatrixXcd dyads =
      vb * va.adjoint() - va * vb.adjoint();  // anti-Hermitian
  Eigen::MatrixXcd m = (complexd(0.0, 1.0) * energy / s) * dyads;
  Hamiltonian h = make_hamiltonian(m);

  // Construction guarantees: tracelessness, zero mean energy at a, and
  // dispersion equal to E.  These are cheap; verify rather than trust fp.
  detail::require(std::abs(h.trace()) <= 1e-12 * std::max(1.0, energy),
                  errc::internal, "synthesized generator is not traceless");
  detail::require(std::abs(energy_mean(h, pair.a)) <=
                      1e-12 * std::max(1.0, energy),
                  errc::internal,
                  "synthesized generator has nonzero mean energy at a");
  detail::require(std::abs(energy_dispersion(h, pair.a) - energy) <=
                      1e-10 * std::max(1.0, energy),
                  errc::internal,
                  "synthesized generator has wrong energy dispersion");

  const double t_min = hbar * pair.theta_fs / (2.0 * energy);
  return OptimalPlan{std::move(pair), energy, t_min, std::move(h), hbar};
}

/// exp(-i H t / hbar) |s>, computed by Hermitian eigendecomposition (exact
/// up to fp for any dimension; never a truncated series).
///
/// Errors: DimensionMismatch; InvalidArgument for hbar <= 0; Internal if the
/// result's norm drifts beyond 1e-12 (cannot happen for a valid solve).
inline PureState propagate(const Hamiltonian& h, const PureState& s, double t,
                           double hbar = 1.0) {
  detail::require(h.dim() == s.dim(), errc::dimension_mismatch,
                  "Hamiltonian and state dimensions differ");
  detail::require(hbar > 0.0, errc::invalid_argument, "hbar must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix());
  detail::require(es.info() == Eigen::Success, errc::internal,
                  "eigendecomposition failed");
  Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * s.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::polar(1.0, -es.eigenvalues()(k) * t / hbar);
  Eigen::VectorXcd out = es.eigenvectors() * coeffs;
  detail::require(std::abs(out.norm() - 1.0) <= 1e-12, errc::internal,
                  "propagation failed to preserve the norm");
  return normalize(out);
}

namespace detail {

/// Maps t in [0, t_min] (with fp slack) to tau = E t / hbar in [0, theta/2].
/// t = t_min maps to theta/2 exactly (E * t_min / hbar does not always
/// round-trip to theta/2 in floating point), so downstream endpoint special
/// cases fire reliably.
inline double tau_of_t(const OptimalPlan& plan, double t) {
  t = clamp_param(t, 0.0, plan.t_min, errc::param_out_of_range,
                  "t must lie in [0, t_min]");
  const double half = plan.theta_fs() / 2.0;
  if (t == plan.t_min) return half;
  return std::min(half, plan.energy * t / plan.hbar);
}

}  // namespace detail

/// The closed-form optimal trajectory at time t in [0, plan.t_min].
/// t = 0 returns a exactly; t = t_min returns e^{i theta_fs/2} b_gauge_fixed
/// (which is the ray of b).
///
/// Errors: ParamOutOfRange.
inline PureState trajectory_closed_form(const OptimalPlan& plan, double t) {
  const double tau = detail::tau_of_t(plan, t);
  const double half = plan.theta_fs() / 2.0;
  if (tau == 0.0) return plan.pair.a;
  const complexd phase = std::polar(1.0, half);
  if (tau == half) return normalize(phase * plan.pair.b.amplitudes());
  const double c = std::cos(half), s = std::sin(half);
  const Eigen::VectorXcd raw =
      (std::cos(tau) - (c / s) * std::sin(tau)) * plan.pair.a.amplitudes() +
      (phase * (std::sin(tau) / s)) * plan.pair.b.amplitudes();
  return normalize(raw);
}

/// Time-to-affine-parameter map: the xi for which the trajectory coincides
/// with the geodesic family point.  Monotone from xi(0) = 0 to
/// xi(t_min) = 1, both exact.  Evaluated in the pole-free form
/// sin(tau) / [cos(tau) sin(theta/2) + (1 - cos(theta/2)) sin(tau)].
///
/// Errors: ParamOutOfRange.
inline double xi_of_t(const OptimalPlan& plan, double t) {
  const double tau = detail::tau_of_t(plan, t);
  const double half = plan.theta_fs() / 2.0;
  if (tau == 0.0) return 0.0;
  if (tau == half) return 1.0;
  const double c = std::cos(half), s = std::sin(half);
  const double sn = std::sin(tau);
  return sn / (std::cos(tau) * s + (1.0 - c) * sn);
}

/// Time-to-angle-parameter map eta(t) = 2 atan2(sin tau, sin(theta/2 - tau)).
/// The atan2 form keeps the branch continuous through the point where the
/// principal-branch arctangent denominator crosses zero, and lands exactly
/// on eta(t_min) = pi.  Agrees with theta_of_xi(xi_of_t(t)).
///
/// Errors: ParamOutOfRange.
inline double eta_of_t(const OptimalPlan& plan, double t) {
  const double tau = detail::tau_of_t(plan, t);
  const double half = plan.theta_fs() / 2.0;
  if (tau == 0.0) return 0.0;
  if (tau == half) return std::numbers::pi;
  return 2.0 * std::atan2(std::sin(tau), std::sin(half - tau));
}

/// Uniform time-sampling of the plan's closed-form trajectory as a
/// SampledCurve with n >= 2 points (parameter = t; endpoints exact).
inline SampledCurve sample_trajectory(const OptimalPlan& plan, std::size_t n) {
  detail::require(n >= 2, errc::curve_too_short,
                  "sampling a trajectory needs at least two points");
  std::vector<double> ts(n);
  std::vector<PureState> states;
  states.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (k + 1 == n) ? plan.t_min
                                  : plan.t_min * static_cast<double>(k) /
                                        static_cast<double>(n - 1);
    ts[k] = t;
    states.push_back(trajectory_closed_form(plan, t));
  }
  return SampledCurve(std::move(ts), std::move(states));
}

}  // namespace qgeo
