// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force Fock-space evaluation of detection probabilities.
 *
 * Orbitals are (mode, spin) pairs ordered by mode slot, then by the declared
 * spin order. The N = 0, 1, 2 particle sectors are enumerated explicitly and
 * creation operators are stored as dense matrices between neighbouring
 * sectors. Two-particle basis states are |k1 k2> = a+_{k1} a+_{k2} |0> with
 * k1 < k2, plus |k k> = (a+_k)^2 |0> / sqrt(2) for bosons. Norms use the
 * usual positive convention; only the probability quotients are comparable to
 * analytic.hpp.
 */

#pragma once

#include <multidet/modes.hpp>
#include <multidet/states.hpp>

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace multidet {

/// Particle-number sector selector for operator matrices.
enum class Level : unsigned char {
  OneToZero,  ///< annihilation N=1 -> N=0
  TwoToOne,   ///< annihilation N=2 -> N=1
};

class FockSector {
 public:
  using Matrix = Eigen::MatrixXd;
  using Config = std::pair<int, int>;  // orbital indices, first <= second

  /// Throws InvalidArgument on an empty/duplicated spin set, or when a fermion
  /// sector cannot hold two particles (fewer than two orbitals).
  FockSector(const ModeBasis& basis, std::vector<Spin> spins, Statistics statistics);

  const ModeBasis& basis() const { return basis_; }
  const std::vector<Spin>& spins() const { return spins_; }
  Statistics statistics() const { return statistics_; }

  int orbital_count() const { return orbital_count_; }
  int orbital(int mode_index, Spin spin) const;
  bool has_spin(Spin spin) const;

  std::size_t dimension() const { return configs_.size(); }
  const std::vector<Config>& configs() const { return configs_; }
  /// Position of a canonical configuration in the N=2 basis, or -1.
  int config_index(int k1, int k2) const;

  /// a+_k from N=0 (dim 1) to N=1 (dim K).
  const Matrix& create_one(int k) const { return create_one_[k]; }
  /// a+_k from N=1 (dim K) to N=2.
  const Matrix& create_two(int k) const { return create_two_[k]; }
  /// a_k as the adjoint of the matching creation matrix.
  Matrix annihilate(int k, Level level) const;

 private:
  ModeBasis basis_;
  std::vector<Spin> spins_;
  Statistics statistics_;
  int orbital_count_;
  std::vector<Config> configs_;
  std::vector<int> config_lookup_;  // K*K table, -1 where absent
  std::vector<Matrix> create_one_;
  std::vector<Matrix> create_two_;
};

using FockVector = Eigen::VectorXcd;

FockSector build_sector(const ModeBasis& basis, std::vector<Spin> spins,
                        Statistics statistics);

/// Amplitudes of sum_{n,m} b_n d_m a+_{n sigma} a+_{m Omega} |0>.
/// Throws InvalidArgument on mismatched statistics, dimensions, or spins
/// absent from the sector.
FockVector embed_state(const TwoParticleState& state, const FockSector& sector);

/// psi_mu(x, t) = sum_n phi_n(x) exp(-i E_n t) a_{n mu} as a matrix between
/// the sectors named by `level`. Zero if mu is not in the sector.
Eigen::MatrixXcd field_matrix(const FockSector& sector, double x, double t, Spin mu,
                              Level level = Level::TwoToOne);

/// <I| psi+_mu psi_mu |I> / <I|I>, sum over mu and eta.
double oracle_p_single(const TwoParticleState& state, const FockSector& sector,
                       double x, double t, Spin mu, Spin eta);

/// Single-label version of the above.
double oracle_p_single_component(const TwoParticleState& state,
                                 const FockSector& sector, double x, double t,
                                 Spin mu);

/// <I| psi+_mu psi+_eta psi_eta psi_mu |I> / <I|I>.
double oracle_p_double(const TwoParticleState& state, const FockSector& sector,
                       double x, double t, Spin mu, Spin eta);

/// Pre-embedded variants for evaluating many (x, t) points on one state.
/// Throw DegenerateState when |I|^2 <= kDegenerateNormThreshold.
double oracle_single_component(const FockVector& incident, const FockSector& sector,
                               double x, double t, Spin mu);
double oracle_double(const FockVector& incident, const FockSector& sector, double x,
                     double t, Spin mu, Spin eta);

/// <v| A |v> where A = psi+_mu psi_mu; returned complex so callers can
/// check Hermiticity.
Complex oracle_density_expectation(const FockVector& incident, const FockSector& sector,
                                   double x, double t, Spin mu);

}  // namespace multidet
