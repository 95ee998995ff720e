// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/calibrate.hpp>
#include <multidet/error.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace multidet {

std::string_view to_string(FitModel m) {
  return m == FitModel::TwoBosonLaser ? "two_boson_laser" : "general";
}

std::string_view to_string(Weighting w) {
  return w == Weighting::Uniform ? "uniform" : "poisson";
}

std::string_view to_string(Response r) {
  switch (r) {
    case Response::Auto: return "auto";
    case Response::PDet: return "p_det";
    case Response::Counts: return "counts";
  }
  return "auto";
}

Weighting parse_weighting(std::string_view text) {
  if (text == "uniform") return Weighting::Uniform;
  if (text == "poisson") return Weighting::Poisson;
  throw InvalidArgument("unknown weighting '" + std::string(text) + "'");
}

FitModel parse_fit_model(std::string_view text) {
  if (text == "two_boson_laser") return FitModel::TwoBosonLaser;
  if (text == "general") return FitModel::General;
  throw InvalidArgument("unknown fit model '" + std::string(text) + "'");
}

Response parse_response(std::string_view text) {
  if (text == "auto") return Response::Auto;
  if (text == "p_det") return Response::PDet;
  if (text == "counts") return Response::Counts;
  throw InvalidArgument("unknown response column '" + std::string(text) + "'");
}

namespace {

// 1.96: two-sided 95% normal quantile.
constexpr double kZ95 = 1.959963984540054;
constexpr double kCollinearTolerance = 1e-10;

}  // namespace

AlphaEstimate fit_alphas(const PatternTable& pattern, const FitOptions& options) {
  long long total_counts = 0;
  double total_p_det = 0.0;
  for (const auto& r : pattern.rows) {
    if (r.counts < 0) throw InvalidArgument("negative count in pattern");
    total_counts += r.counts;
    if (std::isfinite(r.p_det)) total_p_det += r.p_det;
  }

  Response response = options.response;
  if (response == Response::Auto) {
    response = total_counts > 0 ? Response::Counts : Response::PDet;
  }
  if (response == Response::Counts && total_counts <= 0) {
    throw InvalidArgument("counts response requested but the counts column is all zero");
  }
  // Count fractions are rescaled to the model's total probability mass.
  const double mass = total_p_det > 0.0 ? total_p_det : 1.0;
  const double per_count =
      response == Response::Counts ? mass / static_cast<double>(total_counts) : 1.0;

  const double basis_scale = options.model == FitModel::TwoBosonLaser ? 2.0 : 1.0;
  std::vector<double> f1, f2, y, w;
  for (const auto& r : pattern.rows) {
    const double yi = response == Response::Counts
                          ? static_cast<double>(r.counts) * per_count
                          : r.p_det;
    if (!std::isfinite(r.u) || !std::isfinite(yi)) continue;
    double wi = 1.0;
    if (options.weighting == Weighting::Poisson) {
      // Variance in count units: n_i for sampled data, y_i for model data.
      const double level =
          response == Response::Counts ? static_cast<double>(r.counts) : yi;
      wi = 1.0 / std::max(level, 1.0);
    }
    f1.push_back(basis_scale * r.u);
    f2.push_back(basis_scale * r.u * r.u);
    y.push_back(yi);
    w.push_back(wi);
  }
  const auto n = static_cast<Eigen::Index>(y.size());
  if (n < 3) throw InvalidArgument("fit needs at least 3 usable rows");
  if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) {
    throw InvalidArgument("response column is identically zero");
  }

  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd Y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sw = std::sqrt(w[i]);
    X(i, 0) = sw * f1[i];
    X(i, 1) = sw * f2[i];
    Y(i) = sw * y[i];
  }
  const double n1 = X.col(0).norm();
  const double n2 = X.col(1).norm();
  if (!(n1 > 0.0) || !(n2 > 0.0) ||
      1.0 - std::abs(X.col(0).dot(X.col(1))) / (n1 * n2) < kCollinearTolerance) {
    throw CollinearDesign("design columns are collinear (is u constant?)");
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::Vector2d beta = qr.solve(Y);
  const Eigen::VectorXd resid = Y - X * beta;
  const double rss = resid.squaredNorm();

  const Eigen::Matrix2d normal = X.transpose() * X;
  // Poisson weights on counts are inverse variances in count units, so the
  // scale is known: per_count^2. Otherwise estimate it from the residuals.
  const bool known_variance =
      response == Response::Counts && options.weighting == Weighting::Poisson;
  const double sigma2 = known_variance ? per_count * per_count
                        : n > 2        ? rss / static_cast<double>(n - 2)
                                       : 0.0;
  Eigen::Matrix2d cov = sigma2 * normal.inverse();
  cov = 0.5 * (cov + cov.transpose());

  AlphaEstimate est;
  est.alpha_sin_hat = beta(0);
  est.alpha_dou_hat = beta(1);
  if (est.alpha_sin_hat > 0.0) est.ratio = est.alpha_dou_hat / est.alpha_sin_hat;
  est.covariance = {cov(0, 0), cov(0, 1), cov(1, 0), cov(1, 1)};
  est.residual_norm = std::sqrt(rss);
  est.response = response;
  est.normalization = response == Response::Counts ? mass : 1.0;
  est.rows_used = static_cast<std::size_t>(n);
  return est;
}

Interval ratio_confidence(const AlphaEstimate& est) {
  if (!est.ratio || !(est.alpha_sin_hat > 0.0)) {
    throw InvalidArgument("ratio alpha_dou/alpha_sin is undefined (alpha_sin_hat <= 0)");
  }
  const double a = est.alpha_sin_hat;
  const double r = *est.ratio;
  // gradient of b/a with respect to (a, b)
  const double ga = -r / a;
  const double gb = 1.0 / a;
  const auto& c = est.covariance;
  const double var = ga * ga * c[0] + 2.0 * ga * gb * c[1] + gb * gb * c[3];
  const double half = kZ95 * std::sqrt(std::max(var, 0.0));
  return Interval{r - half, r + half};
}

}  // namespace multidet
