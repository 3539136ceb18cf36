#pragma once

#include "h2diss/params.hpp"
#include "h2diss/special_functions.hpp"

namespace h2diss {

/// Energy mismatch of the path through intermediate relative momentum `p`:
///   p_e^2/2m'_e + p_N^2/2mu + I_p - Omega - p^2/2mu.
[[nodiscard]] double detuning_f(const Vec3& p, const Vec3& p_e, const Vec3& p_N,
                                const PulseParams& pulse, const PhysicalConstants& k);

/// Time/energy factor exp(i f t_c - tau^2 f^2 / 2) phi_N(p, R0).
[[nodiscard]] Complex time_factor_a(const Vec3& p, const Vec3& p_e, const Vec3& p_N,
                                    const PulseParams& pulse, const WavePacketParams& wp,
                                    const PhysicalConstants& k);

/// The two recoil momenta p_N + p_e/2 and p_N - p_e/2.
struct RecoilPair {
    Vec3 plus;
    Vec3 minus;
};

[[nodiscard]] constexpr RecoilPair shifted_momenta(const Vec3& p_N, const Vec3& p_e) {
    return {p_N + 0.5 * p_e, p_N - 0.5 * p_e};
}

/// kappa A0 (2 pi)^2 tau / (2^{3/2} m'_e c).
[[nodiscard]] double bo_prefactor(const PulseParams& pulse, const PhysicalConstants& k);

/// Born-Oppenheimer dissociative-ionization amplitude
///   N2 A_H(p_e) [a(p-) -/+ a(p+)]   (- ungerade, + gerade).
[[nodiscard]] Complex amplitude_fi(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                                   const WavePacketParams& wp, Parity parity,
                                   const PhysicalConstants& k);

/// Probability split into its t_c-independent direct part and the
/// two-centre cross term. Excludes the N2^2 prefactor.
struct InterferenceTerms {
    double total = 0.0;
    double direct = 0.0;
    double cross = 0.0;
    double phase = 0.0;  // interference phase, principal value in (-pi, pi]
};

/// |A_H|^2 (|a(p-)|^2 + |a(p+)|^2) -/+ 2 |A_H|^2 |a(p+)| |a(p-)| cos(Phi),
/// Phi = arg a(p-) - arg a(p+) evaluated from the actual amplitudes.
[[nodiscard]] InterferenceTerms probability_expanded(const Vec3& p_e, const Vec3& p_N,
                                                     const PulseParams& pulse,
                                                     const WavePacketParams& wp, Parity parity,
                                                     const PhysicalConstants& k);

/// Closed-form interference phase of the Gaussian packet,
///   (|p+| - |p-|) R0 + (p_e . p_N / mu) t_c   (not reduced modulo 2 pi).
/// The exact phase differs by pi when p+ and p- fall on opposite sides of
/// the plane perpendicular to e_pump.
[[nodiscard]] double closed_form_phase(const Vec3& p_e, const Vec3& p_N, double t_c,
                                       double r0, double mu);

/// Relative and recoil momenta reconstructed from one measured proton
/// momentum p_1 and the electron momentum, assuming the molecule was at rest.
struct MeasuredKinematics {
    Vec3 p_n;
    Vec3 p_plus;
    Vec3 p_minus;
};

[[nodiscard]] constexpr MeasuredKinematics kinematics_from_measured(const Vec3& p_1,
                                                                   const Vec3& p_e) {
    return {p_1 + 0.5 * p_e, p_1 + p_e, p_1};
}

}  // namespace h2diss
