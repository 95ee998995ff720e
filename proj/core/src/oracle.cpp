// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace multidet {

FockSector::FockSector(const ModeBasis& basis, std::vector<Spin> spins,
                       Statistics statistics)
    : basis_(basis), spins_(std::move(spins)), statistics_(statistics) {
  if (spins_.empty()) throw InvalidArgument("Fock sector needs at least one spin label");
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    for (std::size_t j = i + 1; j < spins_.size(); ++j) {
      if (spins_[i] == spins_[j]) throw InvalidArgument("duplicate spin label in sector");
    }
  }
  orbital_count_ = basis_.num_modes() * static_cast<int>(spins_.size());
  const int K = orbital_count_;
  const bool fermion = statistics_ == Statistics::Fermion;
  if (fermion && K < 2) {
    throw InvalidArgument("fermion two-particle sector needs at least two orbitals");
  }

  config_lookup_.assign(static_cast<std::size_t>(K) * K, -1);
  for (int k1 = 0; k1 < K; ++k1) {
    for (int k2 = fermion ? k1 + 1 : k1; k2 < K; ++k2) {
      config_lookup_[static_cast<std::size_t>(k1) * K + k2] =
          static_cast<int>(configs_.size());
      configs_.emplace_back(k1, k2);
    }
  }

  const auto dim = static_cast<Eigen::Index>(configs_.size());
  const double exchange = fermion ? -1.0 : 1.0;
  create_one_.reserve(K);
  create_two_.reserve(K);
  for (int k = 0; k < K; ++k) {
    Matrix one = Matrix::Zero(K, 1);
    one(k, 0) = 1.0;
    create_one_.push_back(std::move(one));

    // a+_k acting on |k'> = a+_{k'} |0>.
    Matrix two = Matrix::Zero(dim, K);
    for (int kp = 0; kp < K; ++kp) {
      if (k < kp) {
        two(config_index(k, kp), kp) = 1.0;
      } else if (k > kp) {
        two(config_index(kp, k), kp) = exchange;
      } else if (!fermion) {
        two(config_index(k, k), kp) = std::numbers::sqrt2;
      }
    }
    create_two_.push_back(std::move(two));
  }
}

int FockSector::orbital(int mode_index, Spin spin) const {
  const auto it = std::find(spins_.begin(), spins_.end(), spin);
  if (it == spins_.end()) throw InvalidArgument("spin label not present in sector");
  const auto spin_pos = static_cast<int>(it - spins_.begin());
  return static_cast<int>(basis_.slot(mode_index)) * static_cast<int>(spins_.size()) +
         spin_pos;
}

bool FockSector::has_spin(Spin spin) const {
  return std::find(spins_.begin(), spins_.end(), spin) != spins_.end();
}

int FockSector::config_index(int k1, int k2) const {
  const int K = orbital_count_;
  if (k1 < 0 || k2 < 0 || k1 >= K || k2 >= K || k1 > k2) return -1;
  return config_lookup_[static_cast<std::size_t>(k1) * K + k2];
}

FockSector::Matrix FockSector::annihilate(int k, Level level) const {
  return level == Level::OneToZero ? create_one_.at(k).transpose()
                                   : create_two_.at(k).transpose();
}

FockSector build_sector(const ModeBasis& basis, std::vector<Spin> spins,
                        Statistics statistics) {
  return FockSector(basis, std::move(spins), statistics);
}

FockVector embed_state(const TwoParticleState& state, const FockSector& sector) {
  if (state.statistics() != sector.statistics()) {
    throw InvalidArgument("state and sector use different statistics");
  }
  state.require_compatible(sector.basis());
  const ModeBasis& basis = sector.basis();
  const int K = sector.orbital_count();

  // sum_m d_m a+_{m Omega} |0>
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(K);
  const Eigen::VectorXcd vacuum = Eigen::VectorXcd::Ones(1);
  for (std::size_t i = 0; i < state.d().size(); ++i) {
    const Complex dm = state.d().coeffs()[i];
    if (dm == Complex{}) continue;
    const int k = sector.orbital(basis.index_at(i), state.omega());
    one += dm * (sector.create_one(k).cast<Complex>() * vacuum);
  }

  FockVector two = FockVector::Zero(static_cast<Eigen::Index>(sector.dimension()));
  for (std::size_t i = 0; i < state.b().size(); ++i) {
    const Complex bn = state.b().coeffs()[i];
    if (bn == Complex{}) continue;
    const int k = sector.orbital(basis.index_at(i), state.sigma());
    two += bn * (sector.create_two(k).cast<Complex>() * one);
  }
  return two;
}

Eigen::MatrixXcd field_matrix(const FockSector& sector, double x, double t, Spin mu,
                              Level level) {
  const ModeBasis& basis = sector.basis();
  const Eigen::Index K = sector.orbital_count();
  const Eigen::Index rows = level == Level::OneToZero ? 1 : K;
  const Eigen::Index cols =
      level == Level::OneToZero ? K : static_cast<Eigen::Index>(sector.dimension());
  Eigen::MatrixXcd field = Eigen::MatrixXcd::Zero(rows, cols);
  if (!sector.has_spin(mu)) return field;
  for (int n = basis.min_index(); n <= basis.max_index(); ++n) {
    const Complex amp = basis.eval(n, x) * std::polar(1.0, -basis.energy(n) * t);
    field += amp * sector.annihilate(sector.orbital(n, mu), level).cast<Complex>();
  }
  return field;
}

namespace {

double require_norm(const FockVector& incident) {
  const double norm2 = incident.squaredNorm();
  if (!(norm2 > kDegenerateNormThreshold)) {
    throw DegenerateState("embedded two-particle state has vanishing norm");
  }
  return norm2;
}

}  // namespace

Complex oracle_density_expectation(const FockVector& incident, const FockSector& sector,
                                   double x, double t, Spin mu) {
  const Eigen::MatrixXcd field = field_matrix(sector, x, t, mu, Level::TwoToOne);
  const Eigen::MatrixXcd density = field.adjoint() * field;
  return incident.dot(density * incident);  // dot() conjugates the left operand
}

double oracle_single_component(const FockVector& incident, const FockSector& sector,
                               double x, double t, Spin mu) {
  const double norm2 = require_norm(incident);
  // <I| psi+ psi |I> = || psi |I> ||^2
  const Eigen::VectorXcd reduced = field_matrix(sector, x, t, mu, Level::TwoToOne) * incident;
  return reduced.squaredNorm() / norm2;
}

double oracle_double(const FockVector& incident, const FockSector& sector, double x,
                     double t, Spin mu, Spin eta) {
  const double norm2 = require_norm(incident);
  const Eigen::VectorXcd one = field_matrix(sector, x, t, mu, Level::TwoToOne) * incident;
  const Eigen::VectorXcd zero = field_matrix(sector, x, t, eta, Level::OneToZero) * one;
  return zero.squaredNorm() / norm2;
}

double oracle_p_single_component(const TwoParticleState& state,
                                 const FockSector& sector, double x, double t,
                                 Spin mu) {
  return oracle_single_component(embed_state(state, sector), sector, x, t, mu);
}

double oracle_p_single(const TwoParticleState& state, const FockSector& sector,
                       double x, double t, Spin mu, Spin eta) {
  const FockVector incident = embed_state(state, sector);
  return oracle_single_component(incident, sector, x, t, mu) +
         oracle_single_component(incident, sector, x, t, eta);
}

double oracle_p_double(const TwoParticleState& state, const FockSector& sector,
                       double x, double t, Spin mu, Spin eta) {
  return oracle_double(embed_state(state, sector), sector, x, t, mu, eta);
}

}  // namespace multidet
