#include "h2diss/fixed_nuclei.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "h2diss/atomic.hpp"

namespace h2diss {

double fixed_nuclei_probability(const Vec3& p_e, const Vec3& r_vec, const Vec3& e_probe,
                                Parity parity) {
    const double sign = parity == Parity::gerade ? 1.0 : -1.0;
    return (1.0 + sign * std::cos(dot(p_e, r_vec))) * std::norm(atomic_amplitude(p_e, e_probe));
}

double chi_factor(double p_e_mag, double r, Parity parity) {
    const double x = p_e_mag * r;
    const double sign = parity == Parity::gerade ? 1.0 : -1.0;
    // sinc by series near the origin
    const double sinc = std::abs(x) < 1e-4 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    return 1.0 + sign * sinc;
}

double electronic_wavefunction(const Vec3& r_e, const Vec3& r_vec, Parity parity) {
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    const double left = inv_sqrt_pi * std::exp(-(r_e + 0.5 * r_vec).norm());
    const double right = inv_sqrt_pi * std::exp(-(r_e - 0.5 * r_vec).norm());
    const double sign = parity == Parity::gerade ? 1.0 : -1.0;
    return (left + sign * right) / std::sqrt(2.0);
}

DensityProfile electronic_density_profile(std::span<const double> z_grid, double r,
                                          Parity parity) {
    if (!(r > 0.0)) throw std::invalid_argument("internuclear distance must be positive");
    DensityProfile out;
    out.density.reserve(z_grid.size());
    out.potential.reserve(z_grid.size());
    const Vec3 r_vec{0.0, 0.0, r};
    for (const double z : z_grid) {
        if (!std::isfinite(z)) throw std::invalid_argument("density grid must be finite");
        const double d_left = std::abs(z + 0.5 * r);
        const double d_right = std::abs(z - 0.5 * r);
        if (d_left == 0.0 || d_right == 0.0) {
            throw std::domain_error("Coulomb potential is singular at z = " + std::to_string(z));
        }
        const double psi = electronic_wavefunction({0.0, 0.0, z}, r_vec, parity);
        out.density.push_back(psi * psi);
        out.potential.push_back(-1.0 / d_left - 1.0 / d_right + 1.0 / r);
    }
    return out;
}

double plane_wave_validity(const WavePacketParams& wp, double t_c, const PhysicalConstants& k) {
    if (t_c < 0.0) throw std::invalid_argument("plane_wave_validity needs t_c >= 0");
    const double kinetic = wp.p0 * wp.p0 / (2.0 * k.mu);
    return kinetic * (wp.r0 + wp.p0 * t_c / k.mu);
}

}  // namespace h2diss
