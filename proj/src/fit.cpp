#include "casimir/fit.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

void check_grid(std::span<const double> x, std::span<const double> y, std::size_t min_points) {
  if (x.size() != y.size()) throw DegenerateGrid("x and y differ in length");
  if (x.size() < min_points) throw DegenerateGrid("too few points for the fit");
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw DegenerateGrid("grid values must be finite and positive");
    }
    if (i > 0) {
      up = up && x[i] > x[i - 1];
      down = down && x[i] < x[i - 1];
    }
  }
  if (!up && !down) throw DegenerateGrid("grid must be strictly monotone");
}

Eigen::VectorXd solve(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs) {
  return design.colPivHouseholderQr().solve(rhs);
}

double scale_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s = std::max(s, v);
  return s;
}

}  // namespace

PowerLawFit fit_leading_coefficient(std::span<const double> x, std::span<const double> y, int power,
                                    int correction_terms) {
  check_grid(x, y, 4);
  if (correction_terms < 0 || static_cast<std::size_t>(correction_terms) + 1 >= x.size()) {
    throw DegenerateGrid("too many correction terms for the grid");
  }
  const auto n = static_cast<Eigen::Index>(x.size());
  const double xs = scale_of(x);
  Eigen::MatrixXd design(n, correction_terms + 1);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    rhs(i) = y[static_cast<std::size_t>(i)] / std::pow(xi, power);
    double p = 1.0;
    for (int j = 0; j <= correction_terms; ++j, p *= xi / xs) design(i, j) = p;
  }
  const Eigen::VectorXd coef = solve(design, rhs);
  PowerLawFit out;
  out.coefficient = coef(0);
  if (out.coefficient == 0.0) throw DegenerateGrid("fitted coefficient vanishes");
  double p = 1.0;
  for (int j = 1; j <= correction_terms; ++j) {
    p *= xs;
    out.corrections.push_back(coef(j) / p);
  }
  const Eigen::VectorXd res = design * coef - rhs;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += std::pow(res(i) / out.coefficient, 2);
  out.relative_rms = std::sqrt(acc / static_cast<double>(n));
  return out;
}

ZeroLimitFit extrapolate_to_zero(std::span<const double> x, std::span<const double> y,
                                 std::span<const int> powers) {
  check_grid(x, y, powers.size() + 1);
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto m = static_cast<Eigen::Index>(powers.size());
  const double xs = scale_of(x);
  Eigen::MatrixXd design(n, m + 1);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)] / xs;
    rhs(i) = y[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) design(i, j + 1) = std::pow(xi, powers[static_cast<std::size_t>(j)]);
  }
  const Eigen::VectorXd coef = solve(design, rhs);
  ZeroLimitFit out;
  out.limit = coef(0);
  for (Eigen::Index j = 0; j < m; ++j) {
    out.coefficients.push_back(coef(j + 1) / std::pow(xs, powers[static_cast<std::size_t>(j)]));
  }
  out.residual_rms = std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(n));
  return out;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  check_grid(x, y, 2);
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::log(x[static_cast<std::size_t>(i)]);
    rhs(i) = std::log(std::abs(y[static_cast<std::size_t>(i)]));
  }
  return solve(design, rhs)(1);
}

std::vector<double> geometric_grid(double first, double last, int count) {
  if (count < 2 || !(first > 0.0) || !(last > 0.0)) throw DegenerateGrid("invalid geometric grid");
  std::vector<double> grid;
  const double ratio = std::pow(last / first, 1.0 / (count - 1));
  for (int i = 0; i < count; ++i) grid.push_back(i == count - 1 ? last : first * std::pow(ratio, i));
  return grid;
}

}  // namespace casimir
