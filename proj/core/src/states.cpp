// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/states.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace multidet {

std::string_view to_string(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

Statistics parse_statistics(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "boson" || t == "bosons") return Statistics::Boson;
  if (t == "fermion" || t == "fermions") return Statistics::Fermion;
  throw InvalidArgument("unknown statistics '" + std::string(text) + "'");
}

Packet::Packet(CoeffVector coeffs, Spin spin) : coeffs_(std::move(coeffs)), spin_(spin) {
  if (coeffs_.empty()) throw InvalidArgument("packet has no coefficients");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("packet coefficient is not finite");
    }
  }
}

Packet Packet::normalized(CoeffVector coeffs, Spin spin) {
  double n2 = 0.0;
  for (const Complex& c : coeffs) n2 += std::norm(c);
  if (!(n2 > 0.0)) throw InvalidArgument("cannot normalize a zero packet");
  const double scale = 1.0 / std::sqrt(n2);
  for (Complex& c : coeffs) c *= scale;
  return Packet(std::move(coeffs), spin);
}

Packet Packet::single_mode(const ModeBasis& basis, int n, Spin spin) {
  CoeffVector c(basis.num_modes(), Complex{});
  c[basis.slot(n)] = 1.0;
  return Packet(std::move(c), spin);
}

double Packet::norm_squared() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return s;
}

bool Packet::is_normalized() const {
  return std::abs(norm_squared() - 1.0) <= kNormalizedTolerance;
}

Complex packet_wavefunction(const Packet& packet, const ModeBasis& basis, double x,
                            double t) {
  if (packet.size() != static_cast<std::size_t>(basis.num_modes())) {
    throw InvalidArgument("packet length does not match the mode basis");
  }
  Complex psi{};
  const auto& c = packet.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Complex{}) continue;
    const int n = basis.index_at(i);
    psi += c[i] * basis.eval(n, x) * std::polar(1.0, -basis.energy(n) * t);
  }
  return psi;
}

Complex overlap(const Packet& d, const Packet& b) {
  if (d.size() != b.size()) throw InvalidArgument("overlap of packets of different length");
  Complex s{};
  for (std::size_t i = 0; i < d.size(); ++i) s += std::conj(d.coeffs()[i]) * b.coeffs()[i];
  return s;
}

TwoParticleState::TwoParticleState(Packet b, Packet d, Statistics statistics)
    : b_(std::move(b)), d_(std::move(d)), statistics_(statistics) {
  if (b_.size() != d_.size()) {
    throw InvalidArgument("two-particle state packets have different lengths");
  }
  overlap_db_ = overlap(d_, b_);
  norm_paper_ = sign() * b_.norm_squared() * d_.norm_squared() +
                delta(sigma(), omega()) * std::norm(overlap_db_);
}

bool TwoParticleState::degenerate() const {
  return std::abs(norm_paper_) < kDegenerateNormThreshold;
}

void TwoParticleState::require_nondegenerate() const {
  if (degenerate()) {
    throw DegenerateState("two-particle state has vanishing norm (" +
                          std::to_string(norm_paper_) +
                          "); detection probabilities are undefined");
  }
}

void TwoParticleState::require_compatible(const ModeBasis& basis) const {
  if (b_.size() != static_cast<std::size_t>(basis.num_modes())) {
    throw InvalidArgument("state has " + std::to_string(b_.size()) +
                          " coefficients but the basis has " +
                          std::to_string(basis.num_modes()) + " modes");
  }
}

double state_norm_paper(const TwoParticleState& state) { return state.norm_paper(); }

}  // namespace multidet
