#pragma once

#include <span>
#include <vector>

namespace casimir {

struct PowerLawFit {
  /// Leading coefficient A of y = A x^p (1 + ...).
  double coefficient = 0.0;
  /// Coefficients of the correction powers x^1 .. x^k of y / x^p.
  std::vector<double> corrections;
  /// RMS of the relative residuals of y / x^p.
  double relative_rms = 0.0;
};

/// Least-squares fit of y / x^power = A + B_1 x + ... + B_k x^k with
/// k = `correction_terms`. Needs at least 4 points, strictly monotone and
/// positive x, and nonzero fitted values; throws DegenerateGrid otherwise.
[[nodiscard]] PowerLawFit fit_leading_coefficient(std::span<const double> x, std::span<const double> y,
                                                  int power, int correction_terms = 1);

struct ZeroLimitFit {
  double limit = 0.0;
  std::vector<double> coefficients;  // of the requested powers
  double residual_rms = 0.0;
};

/// Least-squares fit y = y0 + sum_j c_j x^{powers[j]}, returning y0.
[[nodiscard]] ZeroLimitFit extrapolate_to_zero(std::span<const double> x, std::span<const double> y,
                                              std::span<const int> powers);

/// Least-squares slope of ln|y| against ln x.
[[nodiscard]] double log_log_slope(std::span<const double> x, std::span<const double> y);

/// Geometric grid from `first` to `last` (inclusive) with `count` points.
[[nodiscard]] std::vector<double> geometric_grid(double first, double last, int count);

}  // namespace casimir
