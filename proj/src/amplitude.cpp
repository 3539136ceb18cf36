#include "h2diss/amplitude.hpp"

#include <cmath>

#include "h2diss/atomic.hpp"
#include "h2diss/wavepacket.hpp"

namespace h2diss {

double detuning_f(const Vec3& p, const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                  const PhysicalConstants& k) {
    return p_e.norm2() / (2.0 * k.m_e_prime) + p_N.norm2() / (2.0 * k.mu) + k.i_p - pulse.omega -
           p.norm2() / (2.0 * k.mu);
}

Complex time_factor_a(const Vec3& p, const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                      const WavePacketParams& wp, const PhysicalConstants& k) {
    const double f = detuning_f(p, p_e, p_N, pulse, k);
    // Fourier transform of the rotating-wave part of the Gaussian pulse.
    const double damping = std::exp(-0.5 * pulse.tau * pulse.tau * f * f);
    return std::polar(damping, f * pulse.t_c) * wavepacket_amplitude(p, wp);
}

double bo_prefactor(const PulseParams& pulse, const PhysicalConstants& k) {
    return k.kappa * pulse.a0 * 4.0 * kPi * kPi * pulse.tau /
           (2.0 * std::sqrt(2.0) * k.m_e_prime * k.c);
}

Complex amplitude_fi(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                     const WavePacketParams& wp, Parity parity, const PhysicalConstants& k) {
    const auto [p_plus, p_minus] = shifted_momenta(p_N, p_e);
    const Complex a_minus = time_factor_a(p_minus, p_e, p_N, pulse, wp, k);
    const Complex a_plus = time_factor_a(p_plus, p_e, p_N, pulse, wp, k);
    const Complex pair = parity == Parity::ungerade ? a_minus - a_plus : a_minus + a_plus;
    return bo_prefactor(pulse, k) * atomic_amplitude(p_e, pulse.e_probe) * pair;
}

InterferenceTerms probability_expanded(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                                       const WavePacketParams& wp, Parity parity,
                                       const PhysicalConstants& k) {
    const auto [p_plus, p_minus] = shifted_momenta(p_N, p_e);
    const Complex a_minus = time_factor_a(p_minus, p_e, p_N, pulse, wp, k);
    const Complex a_plus = time_factor_a(p_plus, p_e, p_N, pulse, wp, k);
    const double atomic2 = std::norm(atomic_amplitude(p_e, pulse.e_probe));

    InterferenceTerms out;
    out.phase = std::arg(a_minus * std::conj(a_plus));
    out.direct = atomic2 * (std::norm(a_minus) + std::norm(a_plus));
    const double sign = parity == Parity::ungerade ? -1.0 : 1.0;
    out.cross = sign * 2.0 * atomic2 * std::abs(a_plus) * std::abs(a_minus) * std::cos(out.phase);
    out.total = out.direct + out.cross;
    return out;
}

double closed_form_phase(const Vec3& p_e, const Vec3& p_N, double t_c, double r0, double mu) {
    const auto [p_plus, p_minus] = shifted_momenta(p_N, p_e);
    return (p_plus.norm() - p_minus.norm()) * r0 + dot(p_e, p_N) / mu * t_c;
}

}  // namespace h2diss
