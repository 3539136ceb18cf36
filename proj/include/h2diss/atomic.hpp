#pragma once

#include "h2diss/special_functions.hpp"
#include "h2diss/vec3.hpp"

namespace h2diss {

/// Dipole photoionization amplitude of H(1s) into an exact Coulomb wave with
/// momentum `p_e`, probe polarization `e_probe`.
/// Throws std::invalid_argument for p_e = 0.
[[nodiscard]] Complex atomic_amplitude(const Vec3& p_e, const Vec3& e_probe);

/// Phase of atomic_amplitude() on the continuous branch
///   arg(e.p) - atan(nu) - Im lnGamma(1 + i nu),   nu = 1/|p_e|.
/// Not reduced modulo 2 pi. Throws std::domain_error where the amplitude
/// vanishes (e.p = 0).
[[nodiscard]] double atomic_phase(const Vec3& p_e, const Vec3& e_probe);

/// arg[A_H(p_a) conj(A_H(p_b))] in (-pi, pi]. Continuous as p_a -> p_b.
[[nodiscard]] double atomic_phase_difference(const Vec3& p_a, const Vec3& p_b,
                                             const Vec3& e_probe);

}  // namespace h2diss
