#pragma once

namespace casimir {

/// Orders of the polylogarithm needed by the zero-frequency and
/// low-temperature closed forms.
enum class PolyOrder : int { two = 2, three = 3 };

/// Riemann zeta(3) (Apery's constant).
inline constexpr double kZeta3 = 1.2020569031595942853997381615114499907649862923405;
/// zeta(2) = pi^2 / 6.
inline constexpr double kZeta2 = 1.6449340668482264364724151666460251892189499012068;

/// Real polylogarithm Li_n(z) = sum_{k>=1} z^k / k^n on -1 <= z <= 1.
///
/// Direct series for |z| <= 1/2; the expansion in ln z about z = 1 for
/// 1/2 < z < 1; the duplication relation for z < -1/2. Throws DomainError
/// when |z| > 1.
[[nodiscard]] double polylog(PolyOrder n, double z);

[[nodiscard]] inline double li2(double z) { return polylog(PolyOrder::two, z); }
[[nodiscard]] inline double li3(double z) { return polylog(PolyOrder::three, z); }

[[nodiscard]] constexpr double zeta3() { return kZeta3; }

}  // namespace casimir
