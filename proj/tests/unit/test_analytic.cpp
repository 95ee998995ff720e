// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/analytic.hpp>
#include <multidet/equivalence.hpp>
#include <multidet/error.hpp>
#include <multidet/oracle.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace multidet {
namespace {

const std::vector<Spin> kSpins{Spin::Up, Spin::Down};

TwoParticleState make_state(std::mt19937_64& rng, int M, Spin s1, Spin s2, Statistics st) {
  return TwoParticleState(Packet(testing::random_coeffs(rng, M), s1),
                          Packet(testing::random_coeffs(rng, M), s2), st);
}

TEST(PSingleComponent, TwoBosonLaserSingleTerm) {
  std::mt19937_64 rng(testing::kPropertySeed);
  const ModeBasis basis = make_basis(5, 1.0);
  const Packet b(testing::random_coeffs(rng, 5), Spin::Up);
  const TwoParticleState state(b, b, Statistics::Boson);
  for (double x : {0.0, 0.2, 0.71}) {
    const double u = std::norm(packet_wavefunction(b, basis, x, 0.3));
    const double p = p_single_component(state, basis, x, 0.3, Spin::Up);
    EXPECT_NEAR(p, 2.0 * u, 1e-13);
    EXPECT_NEAR(p, p_detect_two_boson_laser(b, basis, x, 0.3, 1.0, 0.0), 1e-13);
  }
}

TEST(PSingleComponent, UnmatchedLabelIsZero) {
  std::mt19937_64 rng(testing::kPropertySeed + 1);
  const ModeBasis basis = make_basis(3, 1.0);
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const auto state = make_state(rng, 3, Spin::Up, Spin::Up, st);
    EXPECT_EQ(p_single_component(state, basis, 0.3, 0.1, Spin::Down), 0.0);
  }
}

TEST(PSingleComponent, FermionMatchesOracle) {
  std::mt19937_64 rng(testing::kPropertySeed + 2);
  const ModeBasis basis = make_basis(5, 1.4);
  const FockSector sector(basis, kSpins, Statistics::Fermion);
  for (int i = 0; i < 20; ++i) {
    const auto state = make_state(rng, 5, Spin::Up, Spin::Up, Statistics::Fermion);
    ASSERT_GT(std::abs(state.overlap_db()), 1e-3);
    const double x = 0.07 * i;
    const double t = 0.05 * i;
    EXPECT_NEAR(p_single_component(state, basis, x, t, Spin::Up),
                oracle_p_single_component(state, sector, x, t, Spin::Up), 1e-12);
  }
}

TEST(PSingleComponent, DegenerateStateRejected) {
  const ModeBasis basis = make_basis(3, 1.0);
  const Packet b = Packet::normalized({1.0, 2.0, 0.5}, Spin::Up);
  const TwoParticleState pauli(b, b, Statistics::Fermion);
  EXPECT_THROW(p_single_component(pauli, basis, 0.1, 0.0, Spin::Up), DegenerateState);
  EXPECT_THROW(p_double(pauli, basis, 0.1, 0.0, Spin::Up, Spin::Up), DegenerateState);
}

TEST(PSingle, DistinctSpinsIdenticalPackets) {
  std::mt19937_64 rng(testing::kPropertySeed + 3);
  const ModeBasis basis = make_basis(7, 2.0);
  const Packet b(testing::random_coeffs(rng, 7), Spin::Up);
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const TwoParticleState state(b, b.with_spin(Spin::Down), st);
    for (double x : {0.1, 0.9, 1.5}) {
      const double u = std::norm(packet_wavefunction(b, basis, x, 0.4));
      EXPECT_NEAR(p_single(state, basis, x, 0.4, Spin::Up, Spin::Down), 2.0 * u, 1e-13);
    }
  }
}

TEST(PSingle, RejectsEqualLabelsAndMatchesOracle) {
  std::mt19937_64 rng(testing::kPropertySeed + 4);
  const ModeBasis basis = make_basis(5, 1.0);
  const FockSector sector(basis, kSpins, Statistics::Boson);
  const auto state = make_state(rng, 5, Spin::Up, Spin::Down, Statistics::Boson);
  EXPECT_THROW(p_single(state, basis, 0.1, 0.0, Spin::Up, Spin::Up), InvalidArgument);
  for (int i = 0; i < 10; ++i) {
    const auto s = make_state(rng, 5, i % 2 ? Spin::Up : Spin::Down, Spin::Up,
                              Statistics::Boson);
    const double x = 0.093 * i;
    EXPECT_NEAR(p_single(s, basis, x, 0.2, Spin::Up, Spin::Down),
                oracle_p_single(s, sector, x, 0.2, Spin::Up, Spin::Down), 1e-12);
  }
}

TEST(PDouble, FermionSameSpinVanishesExactly) {
  std::mt19937_64 rng(testing::kPropertySeed + 5);
  const ModeBasis basis = make_basis(5, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto state = make_state(rng, 5, Spin::Down, Spin::Down, Statistics::Fermion);
    EXPECT_EQ(p_double(state, basis, 0.02 * i, 0.1, Spin::Down, Spin::Down), 0.0);
  }
}

TEST(PDouble, TwoBosonLaserQuarticTerm) {
  std::mt19937_64 rng(testing::kPropertySeed + 6);
  const ModeBasis basis = make_basis(5, 1.0);
  const Packet b(testing::random_coeffs(rng, 5), Spin::Up);
  const TwoParticleState state(b, b, Statistics::Boson);
  for (double x : {0.05, 0.5, 0.95}) {
    const double u = std::norm(packet_wavefunction(b, basis, x, 0.0));
    EXPECT_NEAR(p_double(state, basis, x, 0.0, Spin::Up, Spin::Up), 2.0 * u * u, 1e-12);
  }
}

TEST(PDouble, MatchesOracleBothStatistics) {
  RandomStateGenerator gen(testing::kOracleSeed, 7);
  for (int i = 0; i < 60; ++i) {
    const auto draw = gen.next();
    const FockSector sector(draw.basis, kSpins, draw.state.statistics());
    const double x = gen.uniform(0.0, draw.basis.box_length());
    for (Spin mu : kAllSpins) {
      for (Spin eta : kAllSpins) {
        EXPECT_NEAR(p_double(draw.state, draw.basis, x, 0.3, mu, eta),
                    oracle_p_double(draw.state, sector, x, 0.3, mu, eta), 1e-12);
      }
    }
  }
}

TEST(PDetect, ChannelCombination) {
  std::mt19937_64 rng(testing::kPropertySeed + 7);
  const ModeBasis basis = make_basis(5, 1.0);
  const auto state = make_state(rng, 5, Spin::Up, Spin::Up, Statistics::Boson);
  const DetectorSettings single_only{Spin::Up, Spin::Down, 0.8, 0.0};
  EXPECT_DOUBLE_EQ(p_detect(state, basis, 0.3, 0.0, single_only),
                   0.8 * p_single(state, basis, 0.3, 0.0, Spin::Up, Spin::Down));

  std::uniform_real_distribution<double> w(0.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const auto s = make_state(rng, 5, i % 2 ? Spin::Up : Spin::Down,
                              i % 3 ? Spin::Up : Spin::Down,
                              i % 2 ? Statistics::Boson : Statistics::Fermion);
    if (s.degenerate()) continue;
    const DetectorSettings set{Spin::Down, Spin::Up, w(rng), w(rng)};
    const double x = 0.04 * i;
    const double expected =
        set.alpha_sin * p_single(s, basis, x, 0.5, Spin::Down, Spin::Up) +
        set.alpha_dou * p_double(s, basis, x, 0.5, Spin::Down, Spin::Up);
    EXPECT_EQ(p_detect(s, basis, x, 0.5, set), expected);
  }
  EXPECT_THROW(p_detect(state, basis, 0.3, 0.0, {Spin::Up, Spin::Down, -1.0, 0.0}),
               InvalidArgument);
}

TEST(PDetect, DistinctSpinLaw) {
  std::mt19937_64 rng(testing::kPropertySeed + 8);
  const ModeBasis basis = make_basis(9, 1.0);
  const Packet b(testing::random_coeffs(rng, 9), Spin::Up);
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const TwoParticleState state(b, b.with_spin(Spin::Down), st);
    const DetectorSettings set{Spin::Up, Spin::Down, 1.3, 0.4};
    for (double x : {0.0, 0.33, 0.8}) {
      const double u = std::norm(packet_wavefunction(b, basis, x, 0.2));
      EXPECT_NEAR(p_detect(state, basis, x, 0.2, set), 1.3 * (u + u) + 0.4 * u * u, 1e-12);
    }
  }
}

TEST(TwoBosonLaser, ClosedForm) {
  const ModeBasis basis = make_basis(3, 1.0);
  // Standing wave cos(2 pi x) has a node at x = 1/4.
  const double s = 1.0 / std::sqrt(2.0);
  const Packet standing({s, 0.0, s}, Spin::Up);
  EXPECT_NEAR(p_detect_two_boson_laser(standing, basis, 0.25, 0.0, 1.0, 1.0), 0.0, 1e-15);

  const Packet flat({0.0, 1.0, 0.0}, Spin::Up);  // u = 1/L = 1
  EXPECT_NEAR(p_detect_two_boson_laser(flat, basis, 0.4, 0.0, 1.0, 1.0), 4.0, 1e-14);

  EXPECT_THROW(p_detect_two_boson_laser(Packet({1.0, 1.0, 0.0}, Spin::Up), basis, 0.0,
                                        0.0, 1.0, 1.0),
               InvalidArgument);
}

TEST(TwoBosonLaser, MatchesOracle) {
  std::mt19937_64 rng(testing::kPropertySeed + 9);
  const ModeBasis basis = make_basis(3, 1.2);
  const Packet b(testing::random_coeffs(rng, 3), Spin::Up);
  const TwoParticleState state(b, b, Statistics::Boson);
  const FockSector sector(basis, kSpins, Statistics::Boson);
  std::uniform_real_distribution<double> ux(0.0, 1.2), ut(0.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const double x = ux(rng), t = ut(rng);
    const double oracle = 0.7 * oracle_p_single_component(state, sector, x, t, Spin::Up) +
                          0.2 * oracle_p_double(state, sector, x, t, Spin::Up, Spin::Up);
    EXPECT_NEAR(p_detect_two_boson_laser(b, basis, x, t, 0.7, 0.2), oracle, 1e-12);
    EXPECT_NEAR(p_detect_single_label(state, basis, x, t, Spin::Up, 0.7, 0.2), oracle,
                1e-12);
  }
}

// ---- properties -----------------------------------------------------------

TEST(AnalyticProperties, Positivity) {
  RandomStateGenerator gen(testing::kPropertySeed, 7);
  for (int i = 0; i < 500; ++i) {
    const auto d = gen.next();
    for (int p = 0; p < 3; ++p) {
      const double x = gen.uniform(0.0, d.basis.box_length());
      const double t = gen.uniform(0.0, 2.0);
      for (Spin mu : kAllSpins) {
        EXPECT_GE(p_single_component(d.state, d.basis, x, t, mu), -kNegativeDust);
        for (Spin eta : kAllSpins) {
          EXPECT_GE(p_double(d.state, d.basis, x, t, mu, eta), -kNegativeDust);
        }
      }
    }
  }
}

TEST(AnalyticProperties, InterferenceGating) {
  std::mt19937_64 rng(testing::kPropertySeed + 10);
  const ModeBasis basis = make_basis(7, 1.0);
  const auto cross_free = [&](const TwoParticleState& s, double x, Spin mu) {
    const double pd = std::norm(packet_wavefunction(s.d(), basis, x, 0.0));
    const double pb = std::norm(packet_wavefunction(s.b(), basis, x, 0.0));
    return (s.sign() * delta(mu, s.omega()) * pd + s.sign() * delta(mu, s.sigma()) * pb) /
           s.norm_paper();
  };
  // Orthogonal packets: even slots vs odd slots.
  CoeffVector even = testing::random_coeffs(rng, 7), odd = testing::random_coeffs(rng, 7);
  for (int i = 0; i < 7; ++i) (i % 2 ? even : odd)[i] = 0.0;
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const TwoParticleState orth(Packet::normalized(even, Spin::Up),
                                Packet::normalized(odd, Spin::Up), st);
    const TwoParticleState spins(Packet(testing::random_coeffs(rng, 7), Spin::Up),
                                 Packet(testing::random_coeffs(rng, 7), Spin::Down), st);
    for (double x : {0.1, 0.45, 0.77}) {
      for (Spin mu : kAllSpins) {
        for (const auto* s : {&orth, &spins}) {
          EXPECT_LT(std::abs(single_component_terms(*s, basis, x, 0.0, mu).cross), 1e-13);
          EXPECT_NEAR(p_single_component(*s, basis, x, 0.0, mu), cross_free(*s, x, mu),
                      1e-13);
        }
      }
    }
  }
}

TEST(AnalyticProperties, SumRule) {
  RandomStateGenerator gen(testing::kPropertySeed + 11, 7);
  for (int i = 0; i < 50; ++i) {
    const auto d = gen.next();
    const double t = gen.uniform(0.0, 2.0);
    const double L = d.basis.box_length();
    const double total = testing::integrate_periodic(
        [&](double x) { return p_single(d.state, d.basis, x, t, Spin::Up, Spin::Down); }, L,
        4096);
    EXPECT_NEAR(total, 2.0, 1e-8);
  }
}

TEST(AnalyticProperties, ExchangeSymmetry) {
  RandomStateGenerator gen(testing::kPropertySeed + 12, 7);
  for (int i = 0; i < 100; ++i) {
    const auto d = gen.next();
    const TwoParticleState swapped = d.state.swapped();
    const double x = gen.uniform(0.0, d.basis.box_length());
    const double t = gen.uniform(0.0, 2.0);
    for (Spin mu : kAllSpins) {
      EXPECT_NEAR(p_single_component(d.state, d.basis, x, t, mu),
                  p_single_component(swapped, d.basis, x, t, mu), 1e-12);
      for (Spin eta : kAllSpins) {
        EXPECT_NEAR(p_double(d.state, d.basis, x, t, mu, eta),
                    p_double(swapped, d.basis, x, t, mu, eta), 1e-12);
      }
    }
  }
}

TEST(AnalyticProperties, StationaryForSingleModePackets) {
  const ModeBasis basis = make_basis(5, 1.0);
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const TwoParticleState s(Packet::single_mode(basis, 1, Spin::Up),
                             Packet::single_mode(basis, -2, Spin::Up), st);
    for (double x : {0.1, 0.6}) {
      const double p0 = p_single_component(s, basis, x, 0.0, Spin::Up);
      const double d0 = p_double(s, basis, x, 0.0, Spin::Up, Spin::Up);
      for (double t : {0.5, 3.0, 17.0}) {
        EXPECT_NEAR(p_single_component(s, basis, x, t, Spin::Up), p0, 1e-12);
        EXPECT_NEAR(p_double(s, basis, x, t, Spin::Up, Spin::Up), d0, 1e-12);
      }
    }
  }
}

TEST(AnalyticProperties, BosonDoubleDominatesFermion) {
  std::mt19937_64 rng(testing::kPropertySeed + 13);
  const ModeBasis basis = make_basis(5, 1.0);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  for (int i = 0; i < 50; ++i) {
    CoeffVector b = testing::random_coeffs(rng, 5);
    CoeffVector d = b;
    for (auto& v : d) v += Complex(jitter(rng), jitter(rng));
    const Packet pb(b, Spin::Up);
    const Packet pd = Packet::normalized(d, Spin::Up);
    const TwoParticleState bos(pb, pd, Statistics::Boson);
    const TwoParticleState fer(pb, pd, Statistics::Fermion);
    ASSERT_FALSE(fer.degenerate());
    const double x = 0.019 * i;
    const double pf = p_double(fer, basis, x, 0.0, Spin::Up, Spin::Up);
    EXPECT_EQ(pf, 0.0);
    EXPECT_GE(p_double(bos, basis, x, 0.0, Spin::Up, Spin::Up), pf);
  }
}

TEST(AnalyticProperties, UnnormalizedPacketsMatchOracle) {
  std::mt19937_64 rng(testing::kPropertySeed + 14);
  const ModeBasis basis = make_basis(3, 1.0);
  for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
    const FockSector sector(basis, kSpins, st);
    CoeffVector b = testing::random_coeffs(rng, 3), d = testing::random_coeffs(rng, 3);
    for (auto& v : b) v *= 1.7;
    for (auto& v : d) v *= 0.6;
    const TwoParticleState s(Packet(b, Spin::Up), Packet(d, Spin::Up), st);
    for (double x : {0.2, 0.8}) {
      EXPECT_NEAR(p_single_component(s, basis, x, 0.1, Spin::Up),
                  oracle_p_single_component(s, sector, x, 0.1, Spin::Up), 1e-12);
      EXPECT_NEAR(p_double(s, basis, x, 0.1, Spin::Up, Spin::Up),
                  oracle_p_double(s, sector, x, 0.1, Spin::Up, Spin::Up), 1e-12);
    }
  }
}

}  // namespace
}  // namespace multidet
