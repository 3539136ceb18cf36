#pragma once

#include <span>
#include <vector>

#include "h2diss/params.hpp"

namespace h2diss {

/// [1 +/- cos(p_e . R)] |A_H(p_e)|^2 for nuclei frozen at R
/// (+ gerade, - ungerade).
[[nodiscard]] double fixed_nuclei_probability(const Vec3& p_e, const Vec3& r_vec,
                                              const Vec3& e_probe, Parity parity);

/// Orientation-averaged two-centre factor 1 +/- sin(p_e R)/(p_e R).
[[nodiscard]] double chi_factor(double p_e_mag, double r, Parity parity);

/// Two-centre LCAO electronic state (1/sqrt2)[psi_1s(r + R/2) +/- psi_1s(r - R/2)].
/// Overlap is not included in the normalization.
[[nodiscard]] double electronic_wavefunction(const Vec3& r_e, const Vec3& r_vec, Parity parity);

struct DensityProfile {
    std::vector<double> density;
    std::vector<double> potential;
};

/// Electron density and two-centre Coulomb potential along the internuclear
/// axis, nuclei at z = -r/2 and z = +r/2.
/// Throws std::domain_error if a grid point sits on a nucleus.
[[nodiscard]] DensityProfile electronic_density_profile(std::span<const double> z_grid, double r,
                                                        Parity parity);

/// Kinetic-to-Coulomb energy ratio of the packet at the probe time,
///   [p0^2 / 2mu] * (R0 + p0 t_c / mu).
/// The plane-wave treatment of the nuclei needs this to be >> 1.
[[nodiscard]] double plane_wave_validity(const WavePacketParams& wp, double t_c,
                                         const PhysicalConstants& k);

}  // namespace h2diss
