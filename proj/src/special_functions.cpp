#include "h2diss/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "h2diss/constants.hpp"

namespace h2diss {
namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;

bool is_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// lnGamma for Re z >= 1/2.
Complex log_gamma_right(Complex z) {
    z -= 1.0;
    Complex sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        sum += kLanczos[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double bessel_series(int l, double x) {
    // j_l(x) = x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    double prefactor = 1.0;
    for (int i = 1; i <= l; ++i) prefactor *= x / (2.0 * i + 1.0);
    const double h = -0.5 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= h / (k * (2.0 * l + 2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return prefactor * sum;
}

}  // namespace

Complex log_gamma_complex(Complex z) {
    if (is_pole(z)) {
        throw std::domain_error("Gamma has a pole at z = " + std::to_string(z.real()));
    }
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

Complex gamma_complex(Complex z) {
    if (is_pole(z)) {
        throw std::domain_error("Gamma has a pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    }
    return std::exp(log_gamma_right(z));
}

double spherical_bessel(int l, double x) {
    if (l < 0 || l > 6) {
        throw std::invalid_argument("spherical_bessel supports 0 <= l <= 6, got " +
                                    std::to_string(l));
    }
    if (!(x >= 0.0)) throw std::invalid_argument("spherical_bessel needs x >= 0");

    // Closed forms lose ~(2l+1)!!/x^{l+1} digits to cancellation at small x.
    if (x < l + 2.0) return bessel_series(l, x);

    const double s = std::sin(x);
    const double c = std::cos(x);
    double jm = s / x;
    if (l == 0) return jm;
    double j = s / (x * x) - c / x;
    for (int n = 1; n < l; ++n) {
        const double jp = (2.0 * n + 1.0) / x * j - jm;
        jm = j;
        j = jp;
    }
    return j;
}

double legendre_p(int l, double u) {
    switch (l) {
        case 0: return 1.0;
        case 1: return u;
        case 2: return 0.5 * (3.0 * u * u - 1.0);
        case 3: return 0.5 * u * (5.0 * u * u - 3.0);
        case 4: {
            const double u2 = u * u;
            return (35.0 * u2 * u2 - 30.0 * u2 + 3.0) / 8.0;
        }
        default: break;
    }
    if (l < 0) throw std::invalid_argument("legendre_p needs l >= 0");
    // Bonnet recurrence from P3, P4.
    double pm = legendre_p(3, u);
    double p = legendre_p(4, u);
    for (int n = 4; n < l; ++n) {
        const double pn = ((2.0 * n + 1.0) * u * p - n * pm) / (n + 1.0);
        pm = p;
        p = pn;
    }
    return p;
}

}  // namespace h2diss
