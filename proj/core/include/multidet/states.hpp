// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief One-particle packets and the two-particle incident state
 *
 *   |I> = sum_{n,m} b_n d_m a+_{n sigma} a+_{m Omega} |0>.
 *
 * The norm is kept in the signed convention
 *   <I|I> = +-|b|^2 |d|^2 + delta(sigma, Omega) |<d|b>|^2
 * (upper sign bosons, lower sign fermions). For normalized packets this is
 * +-1 + delta |<d|b>|^2, so it is negative or zero for fermions.
 */

#pragma once

#include <multidet/modes.hpp>

#include <span>
#include <string_view>

namespace multidet {

enum class Statistics : unsigned char { Boson, Fermion };

std::string_view to_string(Statistics s);
Statistics parse_statistics(std::string_view text);

/// +1 for bosons, -1 for fermions.
constexpr int statistics_sign(Statistics s) { return s == Statistics::Boson ? 1 : -1; }

/// States with |signed norm| below this are degenerate.
inline constexpr double kDegenerateNormThreshold = 1e-10;
/// Tolerance on sum |c_n|^2 - 1 for a packet to count as normalized.
inline constexpr double kNormalizedTolerance = 1e-12;

/// Mode-coefficient vector with a spin label.
class Packet {
 public:
  Packet(CoeffVector coeffs, Spin spin);

  /// Rescales coeffs to unit norm. Throws InvalidArgument on a zero vector.
  static Packet normalized(CoeffVector coeffs, Spin spin);
  /// Single-mode packet c_m = delta_{m,n}.
  static Packet single_mode(const ModeBasis& basis, int n, Spin spin);

  const CoeffVector& coeffs() const { return coeffs_; }
  Spin spin() const { return spin_; }
  std::size_t size() const { return coeffs_.size(); }

  /// sum_n |c_n|^2
  double norm_squared() const;
  bool is_normalized() const;

  Packet with_spin(Spin s) const { return Packet(coeffs_, s); }

 private:
  CoeffVector coeffs_;
  Spin spin_;
};

/// Position-space wavefunction sum_n c_n phi_n(x) exp(-i E_n t).
Complex packet_wavefunction(const Packet& packet, const ModeBasis& basis, double x,
                            double t);

/// <d|b> = sum_n conj(d_n) b_n. Spin labels are not consulted.
Complex overlap(const Packet& d, const Packet& b);

/// Pair of packets (b; sigma), (d; Omega) under a given exchange statistics.
class TwoParticleState {
 public:
  /// Throws InvalidArgument if the packets have different lengths. A zero-norm
  /// state is allowed but reports degenerate().
  TwoParticleState(Packet b, Packet d, Statistics statistics);

  const Packet& b() const { return b_; }
  const Packet& d() const { return d_; }
  Statistics statistics() const { return statistics_; }
  int sign() const { return statistics_sign(statistics_); }

  Spin sigma() const { return b_.spin(); }
  Spin omega() const { return d_.spin(); }

  /// Cached <d|b>.
  Complex overlap_db() const { return overlap_db_; }
  /// Signed norm; see file comment.
  double norm_paper() const { return norm_paper_; }
  bool degenerate() const;

  /// Same state with (b, sigma) and (d, Omega) exchanged.
  TwoParticleState swapped() const { return TwoParticleState(d_, b_, statistics_); }

  /// Throws DegenerateState if degenerate().
  void require_nondegenerate() const;
  /// Throws InvalidArgument unless both packets have basis.num_modes() entries.
  void require_compatible(const ModeBasis& basis) const;

 private:
  Packet b_;
  Packet d_;
  Statistics statistics_;
  Complex overlap_db_;
  double norm_paper_;
};

double state_norm_paper(const TwoParticleState& state);

}  // namespace multidet
