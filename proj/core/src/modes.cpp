// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/modes.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace multidet {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Spin s) { return s == Spin::Up ? "up" : "down"; }

Spin parse_spin(std::string_view text) {
  const std::string t = lowercase(text);
  if (t == "up") return Spin::Up;
  if (t == "down") return Spin::Down;
  throw InvalidArgument("unknown spin label '" + std::string(text) + "'");
}

ModeBasis::ModeBasis(int num_modes, double box_length)
    : num_modes_(num_modes), box_length_(box_length) {
  if (num_modes < 1 || num_modes % 2 == 0) {
    throw InvalidArgument("num_modes must be a positive odd integer, got " +
                          std::to_string(num_modes));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw InvalidArgument("box_length must be positive and finite");
  }
}

void ModeBasis::check_index(int n) const {
  if (!contains(n)) {
    throw InvalidArgument("mode index " + std::to_string(n) + " outside [" +
                          std::to_string(min_index()) + ", " +
                          std::to_string(max_index()) + "]");
  }
}

std::size_t ModeBasis::slot(int n) const {
  check_index(n);
  return static_cast<std::size_t>(n - min_index());
}

int ModeBasis::index_at(std::size_t slot) const {
  if (slot >= static_cast<std::size_t>(num_modes_)) {
    throw InvalidArgument("coefficient slot out of range");
  }
  return static_cast<int>(slot) + min_index();
}

double ModeBasis::momentum(int n) const {
  check_index(n);
  return 2.0 * std::numbers::pi * n / box_length_;
}

double ModeBasis::energy(int n) const {
  const double k = momentum(n);
  return 0.5 * k * k;
}

Complex ModeBasis::eval(int n, double x) const {
  const double k = momentum(n);
  return std::polar(1.0 / std::sqrt(box_length_), k * x);
}

std::vector<double> ModeBasis::momenta() const {
  std::vector<double> out;
  out.reserve(num_modes_);
  for (int n = min_index(); n <= max_index(); ++n) out.push_back(momentum(n));
  return out;
}

ModeBasis make_basis(int num_modes, double box_length) {
  return ModeBasis(num_modes, box_length);
}

Complex eval_mode(const ModeBasis& basis, int n, double x) { return basis.eval(n, x); }

double mode_energy(const ModeBasis& basis, int n) { return basis.energy(n); }

}  // namespace multidet
