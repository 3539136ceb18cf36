#pragma once

#include "h2diss/amplitude.hpp"
#include "h2diss/params.hpp"

namespace h2diss {

/// Mass used in the electron kinetic term of the detuning beyond BO.
enum class ElectronTermMass { m_e_prime, m_e_dprime };

/// Mass parameters of the asymptotic (H atom + proton) eigenstates.
struct NonBoParams {
    double alpha = 0.0;       // m_e / (m_e + m_p)
    double mu_dprime = 0.0;   // H-atom / proton reduced mass
    double m_e_dprime = 0.0;  // electron reduced mass in hydrogen
    ElectronTermMass electron_term = ElectronTermMass::m_e_prime;

    [[nodiscard]] static NonBoParams from(const PhysicalConstants& k);
};

/// Detuning with the relative-motion kinetic term -p^2 / 2mu''.
[[nodiscard]] double tilde_detuning_f(const Vec3& p, const Vec3& p_e, const Vec3& p_N,
                                      const PulseParams& pulse, const PhysicalConstants& k,
                                      const NonBoParams& nb);

[[nodiscard]] Complex tilde_time_factor_a(const Vec3& p, const Vec3& p_e, const Vec3& p_N,
                                          const PulseParams& pulse, const WavePacketParams& wp,
                                          const PhysicalConstants& k, const NonBoParams& nb);

/// (2 pi)^2 A0 tau / (2^{3/2} m''_e c). Carries no kappa factor.
[[nodiscard]] double nonbo_prefactor(const PulseParams& pulse, const PhysicalConstants& k,
                                     const NonBoParams& nb);

/// Ungerade amplitude built from exact asymptotic eigenstates:
///   N2~ [A_H(p_e + alpha p-) a~(p-) - A_H(p_e - alpha p+) a~(p+)].
/// Throws std::invalid_argument if either shifted electron momentum vanishes.
[[nodiscard]] Complex amplitude_nonbo(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                                      const WavePacketParams& wp, const PhysicalConstants& k,
                                      const NonBoParams& nb);

/// Direct/cross decomposition of |amplitude_nonbo|^2 / N2~^2.
[[nodiscard]] InterferenceTerms probability_nonbo_expanded(const Vec3& p_e, const Vec3& p_N,
                                                           const PulseParams& pulse,
                                                           const WavePacketParams& wp,
                                                           const PhysicalConstants& k,
                                                           const NonBoParams& nb);

/// Closed-form non-BO phase (not reduced modulo 2 pi):
///   (|p+| - |p-|) R0 + phi_H(p_e + alpha p-) - phi_H(p_e - alpha p+) + (p_e . p_N / mu'') t_c
/// Same pump-side caveat as closed_form_phase().
[[nodiscard]] double closed_form_nonbo_phase(const Vec3& p_e, const Vec3& p_N,
                                             const PulseParams& pulse, double r0,
                                             const NonBoParams& nb);

}  // namespace h2diss
