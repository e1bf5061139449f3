#pragma once

#include <cmath>
#include <vector>

namespace casimir {

struct DerivativeEstimate {
  double value = 0.0;
  /// |R[L][L] - R[L-1][L-1]| of the extrapolation table (0 when L = 0).
  double error = 0.0;
  /// Diagonal R[j][j], j = 0..L.
  std::vector<double> diagonal;
};

/// First derivative by central differences at steps h, h/2, ..., h/2^levels,
/// combined by Richardson extrapolation in powers of h^2.
template <class F>
DerivativeEstimate central_richardson(F&& f, double x, double h, int levels) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(levels) + 1);
  double step = h;
  for (int k = 0; k <= levels; ++k, step *= 0.5) {
    auto& row = table[static_cast<std::size_t>(k)];
    row.push_back((f(x + step) - f(x - step)) / (2.0 * step));
    double factor = 4.0;
    for (int j = 1; j <= k; ++j, factor *= 4.0) {
      const double fine = row[static_cast<std::size_t>(j - 1)];
      const double coarse = table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
      row.push_back(fine + (fine - coarse) / (factor - 1.0));
    }
  }
  DerivativeEstimate out;
  for (int j = 0; j <= levels; ++j) {
    out.diagonal.push_back(table[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
  }
  out.value = out.diagonal.back();
  if (levels > 0) out.error = std::abs(out.diagonal[levels] - out.diagonal[levels - 1]);
  return out;
}

}  // namespace casimir
