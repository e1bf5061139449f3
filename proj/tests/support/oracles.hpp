#pragma once

#include <cmath>
#include <cstdlib>
#include <random>

namespace oracle {

/// sum_{k>=1} z^k / k^n in long double, stopped once the geometric tail
/// bound |z|^{K+1} / ((K+1)^n (1 - |z|)) falls below `tol` times the sum.
inline long double polylog_series(int n, long double z, long double tol = 1e-19L) {
  long double sum = 0.0L;
  long double power = 1.0L;
  const long double az = std::fabs(z);
  for (long k = 1;; ++k) {
    power *= z;
    sum += power / std::pow(static_cast<long double>(k), n);
    const long double next = std::fabs(power) * az / std::pow(static_cast<long double>(k + 1), n);
    const long double bound = az < 1.0L ? next / (1.0L - az) : next * (k + 1);
    if (bound <= tol * std::fabs(sum) || power == 0.0L) return sum;
    if (k > 50000000) std::abort();
  }
}

/// zeta(3) by Euler-Maclaurin on sum k^-3 with N = 200 (error below 1e-20).
inline long double zeta3_euler_maclaurin() {
  const long N = 200;
  long double s = 0.0L;
  for (long k = N - 1; k >= 1; --k) s += 1.0L / (static_cast<long double>(k) * k * k);
  const long double n = N;
  s += 1.0L / (2.0L * n * n) + 1.0L / (2.0L * n * n * n) + 1.0L / (4.0L * n * n * n * n) -
       1.0L / (12.0L * std::pow(n, 6));
  return s;
}

inline double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260414ULL);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// Five-point central difference, O(h^4).
template <class F>
double derivative5(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace oracle
