// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <multidet/modes.hpp>
#include <multidet/states.hpp>

#include <cstdint>
#include <map>
#include <random>

namespace multidet {

/// Draws random two-particle states for randomized cross-checks.
///
/// Mode counts cycle through the odd values up to max_modes so every size is
/// visited. Roughly a quarter of the draws are structured (b = d, disjoint
/// supports, single modes) so interference and selection-rule edges are hit.
/// Draws whose positive-convention norm is below min_norm are rejected.
class RandomStateGenerator {
 public:
  struct Draw {
    ModeBasis basis;
    TwoParticleState state;
  };

  RandomStateGenerator(std::uint64_t seed, int max_modes, double min_norm = 1e-3);

  Draw next();
  /// Box length, time and position draws for evaluation points.
  double uniform(double lo, double hi);
  Spin random_spin();

 private:
  CoeffVector random_coeffs(std::size_t n, double zero_fraction);

  std::mt19937_64 rng_;
  int max_modes_;
  double min_norm_;
  std::uint64_t count_ = 0;
};

struct EquivalenceOptions {
  int trials = 500;
  std::uint64_t seed = 7;
  int max_modes = 7;
  /// Points (x, t) evaluated per trial.
  int points_per_trial = 4;
  /// Negative control: evaluate the closed forms with the opposite exchange
  /// sign so the comparison must fail.
  bool corrupt_sign = false;
};

struct EquivalenceReport {
  int trials = 0;
  std::uint64_t seed = 0;
  int max_modes = 0;
  long evaluations = 0;
  double max_abs_error = 0.0;
  /// Smallest probability quotient seen on either route.
  double min_probability = 0.0;
  /// Largest |Im <psi+ psi>| seen in the Fock-space route.
  double max_imag_part = 0.0;
  int boson_trials = 0;
  int fermion_trials = 0;
  /// Trials per mode count.
  std::map<int, int> trials_by_modes;
};

/// Compares every closed-form probability (P(mu), P_sin, P_dou) with the
/// Fock-space quotients on random nondegenerate states of both statistics.
/// Throws InvalidArgument if trials < 1 or max_modes < 1.
EquivalenceReport run_equivalence_suite(const EquivalenceOptions& options);

}  // namespace multidet
