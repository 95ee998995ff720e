// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/states.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace multidet {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PacketWavefunction, SingleModeValues) {
  const ModeBasis b = make_basis(3, 2.0 * kPi);
  const Packet p = Packet::single_mode(b, 1, Spin::Up);
  const Complex at0 = packet_wavefunction(p, b, kPi, 0.0);
  const Complex expected = std::exp(Complex(0.0, kPi)) / std::sqrt(2.0 * kPi);
  EXPECT_NEAR(std::abs(at0 - expected), 0.0, 1e-15);

  // E_1 = 0.5 at L = 2 pi.
  const Complex at1 = packet_wavefunction(p, b, kPi, 1.0);
  EXPECT_NEAR(std::abs(at1 - expected * std::exp(Complex(0.0, -0.5))), 0.0, 1e-15);
}

TEST(PacketWavefunction, NormalizedPacketHasUnitNorm) {
  std::mt19937_64 rng(testing::kPropertySeed);
  for (int M : {1, 3, 9, 21}) {
    const ModeBasis b = make_basis(M, 1.7);
    const Packet p(testing::random_coeffs(rng, M), Spin::Down);
    const double n = testing::integrate_periodic(
        [&](double x) { return std::norm(packet_wavefunction(p, b, x, 0.0)); }, 1.7, 4096);
    EXPECT_NEAR(n, 1.0, 1e-9) << M;
  }
}

TEST(PacketWavefunction, MatchesPlaneWaveSum) {
  std::mt19937_64 rng(testing::kPropertySeed + 1);
  const ModeBasis b = make_basis(7, 2.5);
  const Packet p(testing::random_coeffs(rng, 7), Spin::Up);
  for (double x : {0.0, 0.4, 1.3, 2.49}) {
    for (double t : {0.0, 0.3, 1.7}) {
      EXPECT_NEAR(std::abs(packet_wavefunction(p, b, x, t) -
                           testing::plane_wave_sum(p.coeffs(), 2.5, x, t)),
                  0.0, 1e-13);
    }
  }
}

TEST(PacketWavefunction, ProjectionRecoversCoefficients) {
  std::mt19937_64 rng(testing::kPropertySeed + 2);
  const int M = 9;
  const double L = 1.3;
  const ModeBasis b = make_basis(M, L);
  const Packet p(testing::random_coeffs(rng, M), Spin::Up);
  for (int n = b.min_index(); n <= b.max_index(); ++n) {
    const Complex c = testing::integrate_periodic(
        [&](double x) { return std::conj(b.eval(n, x)) * packet_wavefunction(p, b, x, 0.0); },
        L, 2 * M * 8);
    EXPECT_LT(std::abs(c - p.coeffs()[b.slot(n)]), 1e-10);
  }
}

TEST(PacketWavefunction, DimensionMismatch) {
  const ModeBasis b = make_basis(3, 1.0);
  const Packet p(CoeffVector{1.0, 0.0, 0.0, 0.0, 0.0}, Spin::Up);
  EXPECT_THROW(packet_wavefunction(p, b, 0.0, 0.0), InvalidArgument);
}

TEST(Overlap, KnownValues) {
  const Packet b = Packet::normalized({0.3, Complex(0.1, 0.7), 0.2}, Spin::Up);
  EXPECT_NEAR(std::abs(overlap(b, b) - 1.0), 0.0, 1e-15);

  const Packet left({1.0, 0.0, 0.0}, Spin::Up);
  const Packet right({0.0, 0.0, 1.0}, Spin::Up);
  EXPECT_EQ(overlap(left, right), Complex{});

  // d = (delta_0 + delta_1)/sqrt2, b = delta_0 (slots 1, 2 hold n = 0, 1).
  const double s = 1.0 / std::sqrt(2.0);
  const Packet d({0.0, s, s}, Spin::Up);
  const Packet b0({0.0, 1.0, 0.0}, Spin::Down);
  EXPECT_NEAR(std::abs(overlap(d, b0) - s), 0.0, 1e-15);

  EXPECT_THROW(overlap(Packet({1.0}, Spin::Up), b0), InvalidArgument);
}

TEST(Overlap, ConjugateSymmetric) {
  std::mt19937_64 rng(testing::kPropertySeed + 3);
  for (int i = 0; i < 100; ++i) {
    const Packet a(testing::random_coeffs(rng, 5), Spin::Up);
    const Packet c(testing::random_coeffs(rng, 5), Spin::Down);
    EXPECT_LT(std::abs(overlap(a, c) - std::conj(overlap(c, a))), 1e-15);
  }
}

TEST(StateNorm, SignedConvention) {
  const Packet b = Packet::normalized({0.2, 1.0, Complex(0.0, 0.5)}, Spin::Up);
  EXPECT_DOUBLE_EQ(
      state_norm_paper(TwoParticleState(b, b.with_spin(Spin::Down), Statistics::Boson)),
      1.0);
  EXPECT_NEAR(state_norm_paper(TwoParticleState(b, b, Statistics::Boson)), 2.0, 1e-15);

  const TwoParticleState pauli(b, b, Statistics::Fermion);
  EXPECT_NEAR(state_norm_paper(pauli), 0.0, 1e-15);
  EXPECT_TRUE(pauli.degenerate());
  EXPECT_THROW(pauli.require_nondegenerate(), DegenerateState);

  EXPECT_DOUBLE_EQ(
      state_norm_paper(TwoParticleState(b, b.with_spin(Spin::Down), Statistics::Fermion)),
      -1.0);
}

TEST(StateNorm, RangesAndSwapSymmetry) {
  std::mt19937_64 rng(testing::kPropertySeed + 4);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 200; ++i) {
    const int M = 1 + 2 * (i % 4);
    const Spin s1 = coin(rng) ? Spin::Up : Spin::Down;
    const Spin s2 = coin(rng) ? Spin::Up : Spin::Down;
    const Statistics st = coin(rng) ? Statistics::Boson : Statistics::Fermion;
    const TwoParticleState state(Packet(testing::random_coeffs(rng, M), s1),
                                 Packet(testing::random_coeffs(rng, M), s2), st);
    const double n = state.norm_paper();
    if (st == Statistics::Boson) {
      EXPECT_GE(n, 1.0 - 1e-12);
      EXPECT_LE(n, 2.0 + 1e-12);
    } else {
      EXPECT_GE(n, -1.0 - 1e-12);
      EXPECT_LE(n, 1e-12);
    }
    EXPECT_NEAR(std::abs(state.swapped().norm_paper()), std::abs(n), 1e-12);
  }
}

TEST(TwoParticleState, RejectsMismatchedPackets) {
  EXPECT_THROW(TwoParticleState(Packet({1.0}, Spin::Up), Packet({1.0, 0.0, 0.0}, Spin::Up),
                                Statistics::Boson),
               InvalidArgument);
}

TEST(Packet, NormalizationFlag) {
  const Packet raw({1.0, 1.0, 0.0}, Spin::Up);
  EXPECT_FALSE(raw.is_normalized());
  EXPECT_TRUE(Packet::normalized(raw.coeffs(), Spin::Up).is_normalized());
  EXPECT_THROW(Packet::normalized({0.0, 0.0, 0.0}, Spin::Up), InvalidArgument);
}

}  // namespace
}  // namespace multidet
