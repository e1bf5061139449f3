#include "casimir/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

// zeta(-m) for m = 0..21; zero at the negative even integers.
constexpr std::array<double, 22> kZetaNegative = {
    -0.5,
    -1.0 / 12.0,
    0.0,
    1.0 / 120.0,
    0.0,
    -1.0 / 252.0,
    0.0,
    1.0 / 240.0,
    0.0,
    -1.0 / 132.0,
    0.0,
    691.0 / 32760.0,
    0.0,
    -1.0 / 12.0,
    0.0,
    3617.0 / 8160.0,
    0.0,
    -43867.0 / 14364.0,
    0.0,
    174611.0 / 6600.0,
    0.0,
    -854513.0 / 3036.0,
};

double zeta_integer(int s) {
  // Only the arguments reached by n - k with n in {2, 3}.
  if (s == 3) return kZeta3;
  if (s == 2) return kZeta2;
  return kZetaNegative[static_cast<std::size_t>(-s)];
}

double series(int n, double z) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k < 200; ++k) {
    power *= z;
    const double term = power / std::pow(static_cast<double>(k), n);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Li_n(e^mu) = mu^{n-1}/(n-1)! [H_{n-1} - ln(-mu)] + sum_{k != n-1} zeta(n-k) mu^k / k!
// valid for |mu| < 2 pi; used with -ln 2 <= mu < 0.
double log_series(int n, double z) {
  const double mu = std::log(z);
  double harmonic = 0.0;
  double factorial = 1.0;
  for (int j = 1; j < n; ++j) {
    harmonic += 1.0 / j;
    factorial *= j;
  }
  double sum = std::pow(mu, n - 1) / factorial * (harmonic - std::log(-mu));
  double power = 1.0;  // mu^k / k!
  const int k_max = n + static_cast<int>(kZetaNegative.size()) - 1;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) power *= mu / k;
    if (k == n - 1) continue;
    sum += zeta_integer(n - k) * power;
  }
  return sum;
}

double positive_branch(int n, double z) {
  if (z <= 0.5) return series(n, z);
  if (z == 1.0) return n == 2 ? kZeta2 : kZeta3;
  return log_series(n, z);
}

}  // namespace

double polylog(PolyOrder order, double z) {
  const int n = static_cast<int>(order);
  if (!(std::abs(z) <= 1.0)) throw DomainError("polylog argument outside [-1, 1]");
  if (z == 0.0) return 0.0;
  if (z >= -0.5) return z > 0.0 ? positive_branch(n, z) : series(n, z);
  // Li_n(z) + Li_n(-z) = 2^{1-n} Li_n(z^2)
  return std::ldexp(positive_branch(n, z * z), 1 - n) - positive_branch(n, -z);
}

}  // namespace casimir
