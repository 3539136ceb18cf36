#include "h2diss/atomic.hpp"

#include <cmath>
#include <stdexcept>

#include "h2diss/constants.hpp"

namespace h2diss {

Complex atomic_amplitude(const Vec3& p_e, const Vec3& e_probe) {
    const double p2 = p_e.norm2();
    if (!(p2 > 0.0)) throw std::invalid_argument("atomic_amplitude: zero electron momentum");
    const double p = std::sqrt(p2);
    const double nu = 1.0 / p;

    // conj(N_nu) = exp(pi nu / 2) conj(Gamma(1 + i nu)), combined with the
    // Coulomb factor in the exponent so that small p does not overflow.
    const Complex log_gamma = log_gamma_complex(Complex(1.0, nu));
    const Complex exponent = -2.0 * nu * std::atan(p) + 0.5 * kPi * nu + std::conj(log_gamma);

    const double one_plus_p2 = 1.0 + p2;
    const double radial = 2.0 * std::sqrt(2.0) * dot(e_probe, p_e) /
                          (kPi * one_plus_p2 * one_plus_p2);
    return radial * Complex(1.0, -nu) * std::exp(exponent);
}

double atomic_phase(const Vec3& p_e, const Vec3& e_probe) {
    const double p = p_e.norm();
    if (!(p > 0.0)) throw std::invalid_argument("atomic_phase: zero electron momentum");
    const double ep = dot(e_probe, p_e);
    if (ep == 0.0) {
        throw std::domain_error("atomic_phase: amplitude vanishes for p_e perpendicular to e_probe");
    }
    const double nu = 1.0 / p;
    const double sign_phase = ep < 0.0 ? kPi : 0.0;
    return sign_phase - std::atan(nu) - log_gamma_complex(Complex(1.0, nu)).imag();
}

double atomic_phase_difference(const Vec3& p_a, const Vec3& p_b, const Vec3& e_probe) {
    const Complex a = atomic_amplitude(p_a, e_probe);
    const Complex b = atomic_amplitude(p_b, e_probe);
    if (a == 0.0 || b == 0.0) {
        throw std::domain_error("atomic_phase_difference: amplitude vanishes");
    }
    return std::arg(a * std::conj(b));
}

}  // namespace h2diss
