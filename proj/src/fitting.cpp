#include "tviro/fitting.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tviro {

void QVSeries::validate() const {
  int last = 0;
  for (const auto& [r, qv] : points) {
    if (r < 5 || r % 2 == 0) throw std::invalid_argument("QVSeries: r values must be odd and >= 5");
    if (r <= last) throw std::invalid_argument("QVSeries: r values must be strictly increasing");
    last = r;
    (void)qv;
  }
}

double basis_log(int r) { return 2.0 * std::numbers::pi * std::log(r - 2.0) / (r - 2.0); }
double basis_inv(int r) { return 1.0 / (r - 2.0); }

FitResult fit_free(const QVSeries& series) {
  series.validate();
  const auto n = static_cast<Eigen::Index>(series.points.size());
  if (n < 3) throw std::domain_error("fit_free: at least 3 points required");
  Eigen::MatrixXd X(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int r = series.points[static_cast<size_t>(i)].first;
    X(i, 0) = 1.0;
    X(i, 1) = basis_log(r);
    X(i, 2) = basis_inv(r);
    y(i) = series.points[static_cast<size_t>(i)].second;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < 3) throw std::domain_error("fit_free: rank-deficient basis");
  Eigen::VectorXd coef = qr.solve(y);
  FitResult res;
  res.model_tag = "free";
  res.a = coef(0);
  res.b = coef(1);
  res.c = coef(2);
  res.has_c = true;
  res.rss = (y - X * coef).squaredNorm();
  return res;
}

FitResult fit_fixed_volume(const QVSeries& series, double vol) {
  series.validate();
  const auto n = static_cast<Eigen::Index>(series.points.size());
  if (n < 2) throw std::domain_error("fit_fixed_volume: at least 2 points required");
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int r = series.points[static_cast<size_t>(i)].first;
    X(i, 0) = basis_log(r);
    X(i, 1) = basis_inv(r);
    y(i) = series.points[static_cast<size_t>(i)].second - vol;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < 2) throw std::domain_error("fit_fixed_volume: rank-deficient basis");
  Eigen::VectorXd coef = qr.solve(y);
  FitResult res;
  res.model_tag = "fixed_volume";
  res.a = vol;
  res.b = coef(0);
  res.c = coef(1);
  res.has_c = true;
  res.rss = (y - X * coef).squaredNorm();
  return res;
}

FitResult fit_affine(const std::vector<std::pair<int, double>>& pairs) {
  const auto n = static_cast<Eigen::Index>(pairs.size());
  if (n < 2) throw std::domain_error("fit_affine: at least 2 pairs required");
  bool distinct = false;
  for (size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i].first != pairs[0].first) distinct = true;
  if (!distinct) throw std::domain_error("fit_affine: all g values equal");

  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = pairs[static_cast<size_t>(i)].first;
    X(i, 1) = 1.0;
    y(i) = pairs[static_cast<size_t>(i)].second;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  Eigen::VectorXd coef = qr.solve(y);
  FitResult res;
  res.model_tag = "affine";
  res.b = coef(0);  // slope
  res.a = coef(1);  // intercept
  res.rss = (y - X * coef).squaredNorm();
  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  res.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - res.rss / ss_tot;
  res.has_r_squared = true;
  return res;
}

}  // namespace tviro
