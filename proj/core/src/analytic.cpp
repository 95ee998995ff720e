// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/analytic.hpp>
#include <multidet/error.hpp>

#include <cmath>
#include <string>

namespace multidet {

namespace {

double clamp_dust(double v) { return (v < 0.0 && v >= -kNegativeDust) ? 0.0 : v; }

void check_weight(double a, const char* name) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw InvalidArgument(std::string(name) + " must be finite and nonnegative");
  }
}

void check_inputs(const TwoParticleState& state, const ModeBasis& basis) {
  state.require_compatible(basis);
  state.require_nondegenerate();
}

}  // namespace

void DetectorSettings::validate() const {
  check_weight(alpha_sin, "alpha_sin");
  check_weight(alpha_dou, "alpha_dou");
}

SingleComponentTerms single_component_terms(const TwoParticleState& state,
                                            const ModeBasis& basis, double x, double t,
                                            Spin mu) {
  check_inputs(state, basis);
  const int s = state.sign();
  const Spin sigma = state.sigma();
  const Spin omega = state.omega();
  const Complex psi_b = packet_wavefunction(state.b(), basis, x, t);
  const Complex psi_d = packet_wavefunction(state.d(), basis, x, t);

  SingleComponentTerms terms;
  terms.direct_d = s * delta(mu, omega) * std::norm(psi_d) * state.b().norm_squared();
  terms.direct_b = s * delta(mu, sigma) * std::norm(psi_b) * state.d().norm_squared();
  if (delta(sigma, omega) * delta(mu, sigma) != 0) {
    terms.cross = 2.0 * std::real(state.overlap_db() * std::conj(psi_b) * psi_d);
  }
  terms.denominator = state.norm_paper();
  return terms;
}

double p_single_component(const TwoParticleState& state, const ModeBasis& basis,
                          double x, double t, Spin mu) {
  const SingleComponentTerms terms = single_component_terms(state, basis, x, t, mu);
  return clamp_dust(terms.numerator() / terms.denominator);
}

double p_single(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, Spin mu, Spin eta) {
  if (mu == eta) {
    throw InvalidArgument("p_single needs two distinct spin outcomes (mu != eta)");
  }
  return p_single_component(state, basis, x, t, mu) +
         p_single_component(state, basis, x, t, eta);
}

double p_double(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, Spin mu, Spin eta) {
  check_inputs(state, basis);
  const int s = state.sign();
  const Spin sigma = state.sigma();
  const Spin omega = state.omega();
  // Integer so that the fermion same-spin case cancels exactly (2 - 1 - 1).
  const int spin_factor =
      2 * delta(eta, omega) * delta(mu, sigma) * delta(sigma, eta) * delta(omega, mu) +
      s * delta(sigma, mu) * delta(eta, omega) + s * delta(sigma, eta) * delta(mu, omega);
  if (spin_factor == 0) return 0.0;
  const double density_b = std::norm(packet_wavefunction(state.b(), basis, x, t));
  const double density_d = std::norm(packet_wavefunction(state.d(), basis, x, t));
  return clamp_dust(density_d * density_b * spin_factor / state.norm_paper());
}

double p_detect(const TwoParticleState& state, const ModeBasis& basis, double x,
                double t, const DetectorSettings& settings) {
  settings.validate();
  return settings.alpha_sin * p_single(state, basis, x, t, settings.mu, settings.eta) +
         settings.alpha_dou * p_double(state, basis, x, t, settings.mu, settings.eta);
}

double p_detect_single_label(const TwoParticleState& state, const ModeBasis& basis,
                             double x, double t, Spin mu, double alpha_sin,
                             double alpha_dou) {
  check_weight(alpha_sin, "alpha_sin");
  check_weight(alpha_dou, "alpha_dou");
  return alpha_sin * p_single_component(state, basis, x, t, mu) +
         alpha_dou * p_double(state, basis, x, t, mu, mu);
}

double p_detect_two_boson_laser(const Packet& packet, const ModeBasis& basis, double x,
                                double t, double alpha_sin, double alpha_dou) {
  check_weight(alpha_sin, "alpha_sin");
  check_weight(alpha_dou, "alpha_dou");
  if (!packet.is_normalized()) {
    throw InvalidArgument("two-boson-laser closed form needs a normalized packet");
  }
  const double u = std::norm(packet_wavefunction(packet, basis, x, t));
  return 2.0 * alpha_sin * u + 2.0 * alpha_dou * u * u;
}

}  // namespace multidet
