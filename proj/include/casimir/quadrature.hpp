#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace casimir {

/// Neumaier-compensated accumulator. Results depend only on the order of
/// the added terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point rule, computed once by Newton iteration in long double.
[[nodiscard]] const GaussLegendreRule& gauss_legendre(int n);

/// Panel breakpoints for integrands on [lower, lower + span] that decay like
/// e^{-y} and may vary on the scale of `lower` (or of the origin when
/// lower = 0). Panels grow geometrically, width = min(left end, max_width),
/// so each panel is at least one width away from the origin; for lower = 0
/// the grading starts at `min_scale`.
[[nodiscard]] std::vector<double> graded_breakpoints(double lower, double span, double max_width,
                                                     double min_scale = 0x1p-40);

/// Composite Gauss-Legendre over consecutive panels given by `breaks`.
template <class F>
double integrate_panels(F&& f, std::span<const double> breaks, const GaussLegendreRule& rule) {
  CompensatedSum total;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    const double mid = 0.5 * (breaks[p + 1] + breaks[p]);
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total.add(half * panel);
  }
  return total.value();
}

}  // namespace casimir
