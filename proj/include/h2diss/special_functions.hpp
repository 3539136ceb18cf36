#pragma once

#include <complex>

namespace h2diss {

using Complex = std::complex<double>;

/// Principal-branch-continuous log Gamma (the branch that is continuous in
/// the right half plane and real on the positive real axis).
/// Throws std::domain_error at the poles z = 0, -1, -2, ...
[[nodiscard]] Complex log_gamma_complex(Complex z);

/// Gamma function via a Lanczos sum (g = 7, 9 terms) with reflection for
/// Re z < 1/2. Relative accuracy is better than 1e-13 along 1 + i*nu.
[[nodiscard]] Complex gamma_complex(Complex z);

/// Spherical Bessel function of the first kind j_l(x), 0 <= l <= 6, x >= 0.
/// Ascending series below x = l + 2, upward recurrence from the closed
/// forms of j_0, j_1 above.
[[nodiscard]] double spherical_bessel(int l, double x);

/// Legendre polynomial P_l(u), l >= 0.
[[nodiscard]] double legendre_p(int l, double u);

}  // namespace h2diss
