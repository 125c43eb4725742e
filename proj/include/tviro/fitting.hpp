#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tviro {

/// One per-genus series of logarithmic-invariant real parts, indexed by
/// the (odd, strictly increasing) level r.
struct QVSeries {
  int g = 0;
  std::vector<std::pair<int, double>> points;  // (r, Re qv)

  void validate() const;
};

struct FitResult {
  std::string model_tag;  // "free", "fixed_volume" or "affine"
  double a = 0.0;         // constant term (affine: intercept)
  double b = 0.0;         // log-basis coefficient (affine: slope)
  double c = 0.0;
  bool has_c = false;
  double rss = 0.0;
  double r_squared = 0.0;
  bool has_r_squared = false;
};

/// Least squares on the basis {1, 2 pi ln(r-2)/(r-2), 1/(r-2)}, solved by
/// column-pivoted Householder QR. The reported b is normalized against
/// the 2 pi log basis element.
FitResult fit_free(const QVSeries& series);

/// Two-parameter fit of (qv - vol) on {2 pi ln(r-2)/(r-2), 1/(r-2)}.
FitResult fit_fixed_volume(const QVSeries& series, double vol);

/// Ordinary least squares line b = slope*g + intercept over (g, b) pairs;
/// reports R^2 = 1 - SS_res/SS_tot (1 by convention when SS_tot = 0).
FitResult fit_affine(const std::vector<std::pair<int, double>>& pairs);

/// Basis columns shared by the two r-models.
double basis_log(int r);   // 2 pi ln(r-2) / (r-2)
double basis_inv(int r);   // 1 / (r-2)

}  // namespace tviro
