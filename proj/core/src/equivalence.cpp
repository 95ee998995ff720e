// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/analytic.hpp>
#include <multidet/equivalence.hpp>
#include <multidet/error.hpp>
#include <multidet/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace multidet {

RandomStateGenerator::RandomStateGenerator(std::uint64_t seed, int max_modes,
                                           double min_norm)
    : rng_(seed), max_modes_(max_modes), min_norm_(min_norm) {
  if (max_modes < 1) throw InvalidArgument("max_modes must be >= 1");
}

double RandomStateGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Spin RandomStateGenerator::random_spin() {
  return std::bernoulli_distribution(0.5)(rng_) ? Spin::Up : Spin::Down;
}

CoeffVector RandomStateGenerator::random_coeffs(std::size_t n, double zero_fraction) {
  std::normal_distribution<double> gauss;
  std::bernoulli_distribution drop(zero_fraction);
  CoeffVector c(n);
  bool any = false;
  for (auto& v : c) {
    v = drop(rng_) ? Complex{} : Complex(gauss(rng_), gauss(rng_));
    any = any || v != Complex{};
  }
  if (!any) c[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_)] = 1.0;
  return c;
}

RandomStateGenerator::Draw RandomStateGenerator::next() {
  const int odd_count = (max_modes_ + 1) / 2;
  for (;;) {
    const int M = 2 * static_cast<int>(count_ % odd_count) + 1;
    ++count_;
    ModeBasis basis(M, uniform(0.5, 3.0));
    const Statistics stats =
        std::bernoulli_distribution(0.5)(rng_) ? Statistics::Boson : Statistics::Fermion;
    const Spin sigma = random_spin();
    const Spin omega = random_spin();

    const int kind = std::uniform_int_distribution<int>(0, 7)(rng_);
    CoeffVector b = random_coeffs(M, kind == 4 ? 0.5 : 0.0);
    CoeffVector d;
    switch (kind) {
      case 5:  // identical packets
        d = b;
        break;
      case 6: {  // disjoint supports where possible
        d = random_coeffs(M, 0.0);
        for (int i = 0; i < M; ++i) ((i % 2 == 0) ? d : b)[i] = Complex{};
        if (M == 1) d = random_coeffs(M, 0.0);
        break;
      }
      case 7: {  // small perturbation of b
        d = b;
        for (auto& v : d) v += 0.3 * Complex(uniform(-1, 1), uniform(-1, 1));
        break;
      }
      default:
        d = random_coeffs(M, kind == 4 ? 0.5 : 0.0);
    }
    if (std::all_of(b.begin(), b.end(), [](Complex v) { return v == Complex{}; }) ||
        std::all_of(d.begin(), d.end(), [](Complex v) { return v == Complex{}; })) {
      continue;
    }
    TwoParticleState state(Packet::normalized(std::move(b), sigma),
                           Packet::normalized(std::move(d), omega), stats);
    if (std::abs(state.norm_paper()) < min_norm_) continue;
    return Draw{basis, std::move(state)};
  }
}

EquivalenceReport run_equivalence_suite(const EquivalenceOptions& options) {
  if (options.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (options.max_modes < 1) throw InvalidArgument("max_modes must be >= 1");
  if (options.points_per_trial < 1) throw InvalidArgument("points_per_trial must be >= 1");

  EquivalenceReport report;
  report.trials = options.trials;
  report.seed = options.seed;
  report.max_modes = options.max_modes;
  report.min_probability = INFINITY;

  RandomStateGenerator gen(options.seed, options.max_modes);
  const std::vector<Spin> spins(std::begin(kAllSpins), std::end(kAllSpins));

  auto record = [&](double analytic_value, double oracle_value) {
    report.max_abs_error =
        std::max(report.max_abs_error, std::abs(analytic_value - oracle_value));
    report.min_probability =
        std::min({report.min_probability, analytic_value, oracle_value});
    ++report.evaluations;
  };

  for (int trial = 0; trial < options.trials; ++trial) {
    const auto draw = gen.next();
    const ModeBasis& basis = draw.basis;
    const TwoParticleState& state = draw.state;
    const FockSector sector(basis, spins, state.statistics());
    const FockVector incident = embed_state(state, sector);

    const Statistics closed_form_stats =
        options.corrupt_sign ? (state.statistics() == Statistics::Boson
                                    ? Statistics::Fermion
                                    : Statistics::Boson)
                             : state.statistics();
    const TwoParticleState closed_form(state.b(), state.d(), closed_form_stats);
    if (closed_form.degenerate()) continue;
    ++(state.statistics() == Statistics::Boson ? report.boson_trials
                                               : report.fermion_trials);
    ++report.trials_by_modes[basis.num_modes()];

    for (int p = 0; p < options.points_per_trial; ++p) {
      const double x = gen.uniform(0.0, basis.box_length());
      const double t = gen.uniform(0.0, 2.0);

      double oracle_component[2];
      for (int s = 0; s < 2; ++s) {
        const Spin mu = kAllSpins[s];
        oracle_component[s] = oracle_single_component(incident, sector, x, t, mu);
        const Complex raw = oracle_density_expectation(incident, sector, x, t, mu);
        report.max_imag_part = std::max(report.max_imag_part, std::abs(raw.imag()));
        record(p_single_component(closed_form, basis, x, t, mu), oracle_component[s]);
      }
      record(p_single(closed_form, basis, x, t, Spin::Up, Spin::Down),
             oracle_component[0] + oracle_component[1]);
      record(p_single(closed_form, basis, x, t, Spin::Down, Spin::Up),
             oracle_component[1] + oracle_component[0]);
      for (Spin mu : kAllSpins) {
        for (Spin eta : kAllSpins) {
          record(p_double(closed_form, basis, x, t, mu, eta),
                 oracle_double(incident, sector, x, t, mu, eta));
        }
      }
    }
  }
  if (report.evaluations == 0) report.min_probability = 0.0;
  return report;
}

}  // namespace multidet
