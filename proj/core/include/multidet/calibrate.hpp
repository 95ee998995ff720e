// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file calibrate.hpp
 * @brief Weighted linear least squares for the channel weights.
 *
 * The detection law is linear in (alpha_sin, alpha_dou) once u = |psi|^2 is
 * known, so the fit solves
 *
 *   min sum_i w_i (y_i - alpha_sin f1(u_i) - alpha_dou f2(u_i))^2
 *
 * with (f1, f2) = (2u, 2u^2) for the two-boson-laser law or (u, u^2) for the
 * general two-term law.
 */

#pragma once

#include <multidet/experiment.hpp>

#include <array>
#include <optional>
#include <string_view>

namespace multidet {

enum class FitModel : unsigned char { TwoBosonLaser, General };
enum class Weighting : unsigned char { Uniform, Poisson };
/// Which column feeds the response. Auto uses counts when they sum to > 0.
enum class Response : unsigned char { Auto, PDet, Counts };

std::string_view to_string(FitModel m);
std::string_view to_string(Weighting w);
std::string_view to_string(Response r);
Weighting parse_weighting(std::string_view text);
FitModel parse_fit_model(std::string_view text);
Response parse_response(std::string_view text);

struct FitOptions {
  FitModel model = FitModel::TwoBosonLaser;
  Weighting weighting = Weighting::Poisson;
  Response response = Response::Auto;
};

struct AlphaEstimate {
  double alpha_sin_hat = 0.0;
  double alpha_dou_hat = 0.0;
  /// alpha_dou_hat / alpha_sin_hat; empty when alpha_sin_hat <= 0.
  std::optional<double> ratio;
  /// Row-major 2x2, order (alpha_sin, alpha_dou).
  std::array<double, 4> covariance{};
  /// sqrt(sum_i w_i r_i^2) in response units.
  double residual_norm = 0.0;
  /// Column actually fitted (PDet or Counts).
  Response response = Response::PDet;
  /// Total probability mass (sum of p_det) that count fractions are scaled to;
  /// 1 for a p_det response.
  double normalization = 1.0;
  std::size_t rows_used = 0;
  bool alpha_dou_negative() const { return alpha_dou_hat < 0.0; }
};

/// Throws InvalidArgument for fewer than 3 usable rows or an all-zero
/// response, and CollinearDesign when the two design columns are parallel
/// (e.g. constant u).
AlphaEstimate fit_alphas(const PatternTable& pattern, const FitOptions& options = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

/// Delta-method 95% interval for alpha_dou / alpha_sin.
/// Throws InvalidArgument when the ratio is undefined.
Interval ratio_confidence(const AlphaEstimate& est);

}  // namespace multidet
