// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/experiment.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace multidet {

namespace {

void validate_recipe(const ModeBasis& basis, const TwoPathRecipe& r) {
  const double L = basis.box_length();
  if (!(r.x1 >= 0.0 && r.x1 < r.x2 && r.x2 < L)) {
    throw InvalidArgument("two-path packet needs 0 <= x1 < x2 < L");
  }
  if (!(r.width > 0.0) || !std::isfinite(r.width)) {
    throw InvalidArgument("two-path packet width must be positive");
  }
  if (!std::isfinite(r.k0)) throw InvalidArgument("two-path packet k0 must be finite");
}

// Gaussian amplitude whose density has standard deviation `width`, using the
// nearest periodic image of the centre.
double periodic_gaussian(double x, double centre, double width, double L) {
  double dx = x - centre;
  dx -= L * std::round(dx / L);
  return std::exp(-dx * dx / (4.0 * width * width));
}

}  // namespace

TwoPathProjection project_two_path(const ModeBasis& basis, const TwoPathRecipe& recipe,
                                   Spin spin) {
  validate_recipe(basis, recipe);
  const double L = basis.box_length();
  const int M = basis.num_modes();
  const int points = std::max(4096, 32 * M);
  const double dx = L / points;

  std::vector<Complex> target(points);
  double target_norm = 0.0;
  for (int j = 0; j < points; ++j) {
    const double x = j * dx;
    const double envelope = periodic_gaussian(x, recipe.x1, recipe.width, L) +
                            periodic_gaussian(x, recipe.x2, recipe.width, L);
    target[j] = envelope * std::polar(1.0, recipe.k0 * x);
    target_norm += std::norm(target[j]) * dx;
  }

  CoeffVector coeffs(M);
  double captured = 0.0;
  for (int i = 0; i < M; ++i) {
    const int n = basis.index_at(i);
    Complex c{};
    for (int j = 0; j < points; ++j) c += std::conj(basis.eval(n, j * dx)) * target[j];
    coeffs[i] = c * dx;
    captured += std::norm(coeffs[i]);
  }
  const double capture = captured / target_norm;
  return TwoPathProjection{Packet::normalized(std::move(coeffs), spin), capture};
}

Packet two_path_packet(const ModeBasis& basis, const TwoPathRecipe& recipe, Spin spin) {
  TwoPathProjection proj = project_two_path(basis, recipe, spin);
  if (proj.capture < kMinProjectionCapture) {
    throw InvalidArgument("mode basis captures only " + std::to_string(proj.capture) +
                          " of the two-path packet norm; increase num_modes");
  }
  return std::move(proj.packet);
}

Packet two_path_packet(const ModeBasis& basis, double x1, double x2, double width,
                       double k0, Spin spin) {
  return two_path_packet(basis, TwoPathRecipe{x1, x2, width, k0}, spin);
}

void ExperimentConfig::validate() const {
  const ModeBasis basis(num_modes, box_length);
  auto check_spec = [&](const PacketSpec& spec) {
    if (spec.coeffs) {
      if (spec.coeffs->size() != static_cast<std::size_t>(num_modes)) {
        throw InvalidArgument("explicit packet has " +
                              std::to_string(spec.coeffs->size()) +
                              " coefficients, expected num_modes = " +
                              std::to_string(num_modes));
      }
    } else {
      validate_recipe(basis, spec.recipe);
    }
  };
  check_spec(packet_b);
  if (packet_d) check_spec(*packet_d);
  if (!(alpha_sin >= 0.0) || !std::isfinite(alpha_sin)) {
    throw InvalidArgument("alpha_sin must be finite and nonnegative");
  }
  if (!(alpha_dou >= 0.0) || !std::isfinite(alpha_dou)) {
    throw InvalidArgument("alpha_dou must be finite and nonnegative");
  }
  if (!std::isfinite(time)) throw InvalidArgument("time must be finite");
  if (grid < 2) throw InvalidArgument("grid must have at least 2 points");
  if (!(exposure > 0.0) || !std::isfinite(exposure)) {
    throw InvalidArgument("exposure must be positive");
  }
}

double PatternTable::sum_u() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.u;
  return s;
}

double PatternTable::sum_p_det() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.p_det;
  return s;
}

long long PatternTable::sum_counts() const {
  long long s = 0;
  for (const auto& r : rows) s += r.counts;
  return s;
}

namespace {

Packet make_packet(const ModeBasis& basis, const PacketSpec& spec, Spin spin) {
  const Spin s = spec.spin.value_or(spin);
  if (spec.coeffs) return Packet::normalized(*spec.coeffs, s);
  return two_path_packet(basis, spec.recipe, s);
}

}  // namespace

Experiment build_experiment(const ExperimentConfig& config) {
  config.validate();
  ModeBasis basis(config.num_modes, config.box_length);
  Packet b = make_packet(basis, config.packet_b, config.sigma);
  Packet d = config.packet_d ? make_packet(basis, *config.packet_d, config.omega)
                             : b.with_spin(config.omega);
  return Experiment{basis, TwoParticleState(std::move(b), std::move(d), config.statistics)};
}

bool is_two_boson_laser(const TwoParticleState& state, Spin mu, Spin eta) {
  return state.statistics() == Statistics::Boson && state.sigma() == state.omega() &&
         state.sigma() == mu && mu == eta && state.b().coeffs() == state.d().coeffs();
}

PatternTable scan_pattern(const ExperimentConfig& config) {
  const Experiment exp = build_experiment(config);
  const ModeBasis& basis = exp.basis;
  const TwoParticleState& state = exp.state;
  state.require_nondegenerate();

  const bool laser = is_two_boson_laser(state, config.mu, config.eta);
  const DetectorSettings settings{config.mu, config.eta, config.alpha_sin,
                                  config.alpha_dou};
  const double L = basis.box_length();
  const double t = config.time;

  PatternTable table;
  table.rows.resize(static_cast<std::size_t>(config.grid));
  for (int i = 0; i < config.grid; ++i) {
    PatternRow& row = table.rows[i];
    row.x = (i * L) / config.grid;
    row.u = std::norm(packet_wavefunction(state.b(), basis, row.x, t));
    if (laser) {
      row.p_det = p_detect_two_boson_laser(state.b(), basis, row.x, t, config.alpha_sin,
                                           config.alpha_dou);
    } else if (config.mu != config.eta) {
      row.p_det = p_detect(state, basis, row.x, t, settings);
    } else {
      row.p_det = p_detect_single_label(state, basis, row.x, t, config.mu,
                                        config.alpha_sin, config.alpha_dou);
    }
  }
  return table;
}

PatternTable sample_counts(const PatternTable& pattern, double exposure,
                           std::uint64_t seed) {
  if (!(exposure > 0.0) || !std::isfinite(exposure)) {
    throw InvalidArgument("exposure must be positive");
  }
  double total = 0.0;
  for (const auto& r : pattern.rows) {
    if (!(r.p_det >= 0.0) || !std::isfinite(r.p_det)) {
      throw InvalidArgument("p_det column must be finite and nonnegative");
    }
    total += r.p_det;
  }
  if (!(total > 0.0)) throw InvalidArgument("p_det column is identically zero");

  PatternTable out = pattern;
  std::mt19937_64 rng(seed);
  for (auto& r : out.rows) {
    const double lambda = exposure * r.p_det / total;
    if (lambda > 0.0) {
      std::poisson_distribution<long long> draw(lambda);
      r.counts = draw(rng);
    } else {
      r.counts = 0;
    }
  }
  return out;
}

}  // namespace multidet
