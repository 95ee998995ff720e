// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file analytic.hpp
 * @brief Closed-form single and double detection probabilities for the
 *        two-particle state of states.hpp.
 *
 * Every +- below is + for bosons and - for fermions. With psi_b, psi_d the
 * packet wavefunctions at (x, t):
 *
 *   P(mu) = [ +-delta(mu,Omega)|psi_d|^2 +- delta(mu,sigma)|psi_b|^2
 *             + 2 delta(sigma,Omega) delta(mu,sigma) Re(<d|b> conj(psi_b) psi_d) ]
 *           / <I|I>
 *
 *   P_dou(mu, eta) = |psi_d|^2 |psi_b|^2
 *       (2 d(eta,Omega) d(mu,sigma) d(sigma,eta) d(Omega,mu)
 *          +- d(sigma,mu) d(eta,Omega) +- d(sigma,eta) d(mu,Omega)) / <I|I>
 *
 * Numerator and denominator are both negative for fermions; the quotient is
 * not forced positive. Values in [-kNegativeDust, 0) are clamped to zero,
 * anything further below is returned unchanged so callers can detect it.
 * For unnormalized packets the direct terms carry the other packet's squared
 * norm (see TwoParticleState); this reduces to the formula above when both
 * packets are normalized.
 */

#pragma once

#include <multidet/modes.hpp>
#include <multidet/states.hpp>

namespace multidet {

inline constexpr double kNegativeDust = 1e-14;

struct DetectorSettings {
  Spin mu = Spin::Up;
  Spin eta = Spin::Down;
  double alpha_sin = 1.0;
  double alpha_dou = 0.0;

  /// Throws InvalidArgument on negative or non-finite weights.
  void validate() const;
};

/// Signed pieces of P(mu) before division.
struct SingleComponentTerms {
  double direct_d = 0.0;  ///< +-delta(mu,Omega) |psi_d|^2 |b|^2
  double direct_b = 0.0;  ///< +-delta(mu,sigma) |psi_b|^2 |d|^2
  double cross = 0.0;     ///< 2 delta delta Re(<d|b> conj(psi_b) psi_d)
  double denominator = 0.0;

  double numerator() const { return direct_d + direct_b + cross; }
};

SingleComponentTerms single_component_terms(const TwoParticleState& state,
                                            const ModeBasis& basis, double x, double t,
                                            Spin mu);

/// P(x, t; mu).
double p_single_component(const TwoParticleState& state, const ModeBasis& basis,
                          double x, double t, Spin mu);

/// P(mu) + P(eta). Throws InvalidArgument when mu == eta.
double p_single(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, Spin mu, Spin eta);

double p_double(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, Spin mu, Spin eta);

/// alpha_sin * p_single + alpha_dou * p_double.
double p_detect(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, const DetectorSettings& settings);

/// Detector that reports a single spin outcome mu for both channels:
/// alpha_sin * P(mu) + alpha_dou * P_dou(mu, mu). For two identical bosons this
/// is the two-boson-laser law.
double p_detect_single_label(const TwoParticleState& state, const ModeBasis& basis,
                             double x, double t, Spin mu, double alpha_sin,
                             double alpha_dou);

/// 2 alpha_sin |psi|^2 + 2 alpha_dou |psi|^4 for two bosons sharing one
/// normalized packet and spin. Throws InvalidArgument if the packet is not
/// normalized or a weight is negative.
double p_detect_two_boson_laser(const Packet& packet, const ModeBasis& basis, double x,
                                double t, double alpha_sin, double alpha_dou);

}  // namespace multidet
