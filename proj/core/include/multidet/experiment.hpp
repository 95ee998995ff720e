// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiment.hpp
 * @brief Simulated detector scan across a two-path interference pattern.
 *
 * A packet built from two Gaussians (the "slits") is projected onto the mode
 * basis, a detector is placed at each point of a uniform grid over [0, L),
 * and the total detection probability alpha_sin P_sin + alpha_dou P_dou is
 * recorded next to the one-particle density u = |psi|^2. Counts are then drawn
 * per grid point from a Poisson law with a fixed total exposure.
 */

#pragma once

#include <multidet/analytic.hpp>
#include <multidet/modes.hpp>
#include <multidet/states.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace multidet {

struct TwoPathRecipe {
  double x1 = 0.4;
  double x2 = 0.6;
  double width = 0.02;
  double k0 = 0.0;
};

/// Minimum fraction of the target norm the mode projection must capture.
inline constexpr double kMinProjectionCapture = 0.99;

struct TwoPathProjection {
  Packet packet;
  double capture = 0.0;  ///< sum |c_n|^2 / integral |psi_0|^2 before renormalizing
};

/// Projects the two-Gaussian wavefunction onto the basis without enforcing
/// the capture threshold.
TwoPathProjection project_two_path(const ModeBasis& basis, const TwoPathRecipe& recipe,
                                   Spin spin);

/// Normalized two-path packet. Throws InvalidArgument if the recipe violates
/// 0 <= x1 < x2 < L, w > 0, or if the basis captures less than 99% of the norm.
Packet two_path_packet(const ModeBasis& basis, double x1, double x2, double width,
                       double k0, Spin spin);
Packet two_path_packet(const ModeBasis& basis, const TwoPathRecipe& recipe, Spin spin);

/// Explicit coefficients or a two-path recipe for one particle.
struct PacketSpec {
  std::optional<CoeffVector> coeffs;
  TwoPathRecipe recipe;
  std::optional<Spin> spin;  ///< overrides the spin from ExperimentConfig
};

struct ExperimentConfig {
  int num_modes = 41;
  double box_length = 1.0;
  PacketSpec packet_b;
  /// Defaults to packet_b's shape when absent.
  std::optional<PacketSpec> packet_d;
  Statistics statistics = Statistics::Boson;
  Spin sigma = Spin::Up;
  Spin omega = Spin::Up;
  Spin mu = Spin::Up;
  Spin eta = Spin::Up;
  double alpha_sin = 1.0;
  double alpha_dou = 0.1;
  double time = 0.0;
  int grid = 201;
  double exposure = 1e6;
  std::uint64_t seed = 12345;

  /// Throws InvalidArgument on violated invariants.
  void validate() const;
};

struct PatternRow {
  double x = 0.0;
  double u = 0.0;
  double p_det = 0.0;
  long long counts = 0;
};

struct PatternTable {
  std::vector<PatternRow> rows;

  std::size_t size() const { return rows.size(); }
  double sum_u() const;
  double sum_p_det() const;
  long long sum_counts() const;
};

struct Experiment {
  ModeBasis basis;
  TwoParticleState state;
};

/// Builds the basis and incident state described by a config.
Experiment build_experiment(const ExperimentConfig& config);

/// True when the state is two bosons in one packet with every spin label equal.
bool is_two_boson_laser(const TwoParticleState& state, Spin mu, Spin eta);

/// Detector scan at grid points x_i = i L / grid. u is |psi_b|^2; p_det uses the
/// two-boson-laser closed form when it applies, p_detect when mu != eta, and
/// p_detect_single_label otherwise. Counts are zero.
/// Throws DegenerateState for a zero-norm state.
PatternTable scan_pattern(const ExperimentConfig& config);

/// Poisson counts with mean exposure * p_det_i / sum_j p_det_j, drawn from one
/// mt19937_64 stream in row order. Throws InvalidArgument if every p_det is
/// zero or exposure is not positive.
PatternTable sample_counts(const PatternTable& pattern, double exposure,
                           std::uint64_t seed);

}  // namespace multidet
