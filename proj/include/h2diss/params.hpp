#pragma once

#include "h2diss/constants.hpp"
#include "h2diss/vec3.hpp"

namespace h2diss {

/// Electronic parity of the dissociating state.
enum class Parity { gerade, ungerade };

/// Gaussian UV probe pulse, atomic units throughout.
struct PulseParams {
    double a0 = 1.0;       // vector-potential amplitude
    Vec3 e_probe{0, 0, 1};
    double omega = 0.0;    // central frequency
    double tau = 0.0;      // Gaussian width, tau_FWHM = 2 sqrt(ln 2) tau
    double t_c = 0.0;      // pulse peak, measured from pump turn-off

    /// Throws std::invalid_argument unless |e_probe| = 1, tau > 0 and
    /// omega > I_p (one-photon ionization).
    void validate(const PhysicalConstants& k) const;
};

/// Dissociating nuclear wave packet on the ungerade surface (J = 1).
struct WavePacketParams {
    double p0 = 0.0;       // central radial momentum
    double delta_r = 0.0;  // spatial width
    double r0 = 0.0;       // launch position
    Vec3 e_pump{0, 0, 1};
    double c_n = 1.0;      // normalization

    /// Throws std::invalid_argument on non-positive p0, delta_r, r0 or a
    /// non-unit pump polarization.
    void validate() const;

    /// Constant that makes the momentum density integrate to one.
    [[nodiscard]] static double normalization(double p0, double delta_r);

    /// Packet with `c_n` set from normalization().
    [[nodiscard]] static WavePacketParams normalized(double p0, double delta_r, double r0,
                                                     Vec3 e_pump);
};

}  // namespace h2diss
