// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file modes.hpp
 * @brief Plane-wave mode basis of a 1D periodic box.
 *
 * Mode n has momentum k_n = 2 pi n / L and wavefunction
 * phi_n(x) = exp(i k_n x) / sqrt(L). Mode indices run symmetrically over
 * -(M-1)/2 ... +(M-1)/2, so M must be odd. Units are hbar = m = 1 and the
 * dispersion is E_n = k_n^2 / 2, independent of spin.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace multidet {

using Complex = std::complex<double>;
using CoeffVector = std::vector<Complex>;

/// Definite spin label carried by packets and detector settings.
enum class Spin : unsigned char { Up, Down };

inline constexpr Spin kAllSpins[] = {Spin::Up, Spin::Down};

std::string_view to_string(Spin s);
/// Parses "up"/"down" (case-insensitive). Throws InvalidArgument otherwise.
Spin parse_spin(std::string_view text);

/// Kronecker delta on spin labels.
constexpr int delta(Spin a, Spin b) { return a == b ? 1 : 0; }

class ModeBasis {
 public:
  /// Throws InvalidArgument unless num_modes is odd and positive and
  /// box_length is positive and finite.
  ModeBasis(int num_modes, double box_length);

  int num_modes() const { return num_modes_; }
  double box_length() const { return box_length_; }

  /// Largest mode index, (M-1)/2.
  int max_index() const { return (num_modes_ - 1) / 2; }
  int min_index() const { return -max_index(); }
  bool contains(int n) const { return n >= min_index() && n <= max_index(); }

  /// Storage slot of mode n in a coefficient vector (0 for the most negative n).
  std::size_t slot(int n) const;
  /// Mode index stored at a coefficient slot.
  int index_at(std::size_t slot) const;

  double momentum(int n) const;
  /// E_n = k_n^2 / 2.
  double energy(int n) const;
  /// phi_n(x) = exp(i k_n x) / sqrt(L). Any real x is accepted (periodic).
  Complex eval(int n, double x) const;

  /// Momenta of all modes in slot order.
  std::vector<double> momenta() const;

  friend bool operator==(const ModeBasis&, const ModeBasis&) = default;

 private:
  void check_index(int n) const;

  int num_modes_;
  double box_length_;
};

ModeBasis make_basis(int num_modes, double box_length);
Complex eval_mode(const ModeBasis& basis, int n, double x);
double mode_energy(const ModeBasis& basis, int n);

}  // namespace multidet
