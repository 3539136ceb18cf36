#include "h2diss/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace h2diss {

void PulseParams::validate(const PhysicalConstants& k) const {
    if (!is_unit(e_probe)) throw std::invalid_argument("probe polarization must be a unit vector");
    if (!(tau > 0.0)) throw std::invalid_argument("probe duration tau must be positive");
    if (!(omega > k.i_p)) {
        throw std::invalid_argument("probe frequency must exceed the ionization potential");
    }
    if (!std::isfinite(t_c) || !std::isfinite(a0)) {
        throw std::invalid_argument("probe delay and amplitude must be finite");
    }
}

void WavePacketParams::validate() const {
    if (!(p0 > 0.0)) throw std::invalid_argument("wave packet p0 must be positive");
    if (!(delta_r > 0.0)) throw std::invalid_argument("wave packet width must be positive");
    if (!(r0 > 0.0)) throw std::invalid_argument("wave packet launch position must be positive");
    if (!is_unit(e_pump)) throw std::invalid_argument("pump polarization must be a unit vector");
}

double WavePacketParams::normalization(double p0, double delta_r) {
    if (!(delta_r > 0.0)) throw std::invalid_argument("wave packet width must be positive");
    // \int |phi|^2 d^3p = C^2 (4 pi / 3) \int_0^inf exp(-dR^2 (p - p0)^2) dp
    const double radial = std::sqrt(kPi) / (2.0 * delta_r) * (1.0 + std::erf(delta_r * p0));
    return 1.0 / std::sqrt(4.0 * kPi / 3.0 * radial);
}

WavePacketParams WavePacketParams::normalized(double p0, double delta_r, double r0, Vec3 e_pump) {
    WavePacketParams wp{p0, delta_r, r0, e_pump, normalization(p0, delta_r)};
    wp.validate();
    return wp;
}

Complex wavepacket_amplitude(const Vec3& p, const WavePacketParams& wp) {
    const double pm = p.norm();
    if (!(pm > 0.0)) throw std::invalid_argument("wavepacket_amplitude: zero momentum");
    const double cos_theta = dot(p, wp.e_pump) / pm;
    const double dp = pm - wp.p0;
    const double modulus =
        wp.c_n * cos_theta / pm * std::exp(-0.5 * wp.delta_r * wp.delta_r * dp * dp);
    return std::polar(1.0, (wp.p0 - pm) * wp.r0) * modulus;
}

}  // namespace h2diss
