#include "h2diss/nonbo.hpp"

#include <cmath>
#include <stdexcept>

#include "h2diss/atomic.hpp"
#include "h2diss/wavepacket.hpp"

namespace h2diss {

NonBoParams NonBoParams::from(const PhysicalConstants& k) {
    return {k.alpha, k.mu_dprime, k.m_e_dprime, ElectronTermMass::m_e_prime};
}

double tilde_detuning_f(const Vec3& p, const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                        const PhysicalConstants& k, const NonBoParams& nb) {
    const double m_electron =
        nb.electron_term == ElectronTermMass::m_e_prime ? k.m_e_prime : nb.m_e_dprime;
    return p_e.norm2() / (2.0 * m_electron) + p_N.norm2() / (2.0 * k.mu) + k.i_p - pulse.omega -
           p.norm2() / (2.0 * nb.mu_dprime);
}

Complex tilde_time_factor_a(const Vec3& p, const Vec3& p_e, const Vec3& p_N,
                            const PulseParams& pulse, const WavePacketParams& wp,
                            const PhysicalConstants& k, const NonBoParams& nb) {
    const double f = tilde_detuning_f(p, p_e, p_N, pulse, k, nb);
    const double damping = std::exp(-0.5 * pulse.tau * pulse.tau * f * f);
    return std::polar(damping, f * pulse.t_c) * wavepacket_amplitude(p, wp);
}

double nonbo_prefactor(const PulseParams& pulse, const PhysicalConstants& k,
                       const NonBoParams& nb) {
    return 4.0 * kPi * kPi * pulse.a0 * pulse.tau / (2.0 * std::sqrt(2.0) * nb.m_e_dprime * k.c);
}

namespace {

// The two interfering paths: electron released next to the proton that
// recoils with p- (first) or p+ (second).
struct NonBoPaths {
    Complex first;
    Complex second;
};

NonBoPaths nonbo_paths(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                       const WavePacketParams& wp, const PhysicalConstants& k,
                       const NonBoParams& nb) {
    const auto [p_plus, p_minus] = shifted_momenta(p_N, p_e);
    const Vec3 q_first = p_e + nb.alpha * p_minus;
    const Vec3 q_second = p_e - nb.alpha * p_plus;
    if (!(q_first.norm2() > 0.0) || !(q_second.norm2() > 0.0)) {
        throw std::invalid_argument("amplitude_nonbo: shifted electron momentum vanishes");
    }
    return {atomic_amplitude(q_first, pulse.e_probe) *
                tilde_time_factor_a(p_minus, p_e, p_N, pulse, wp, k, nb),
            atomic_amplitude(q_second, pulse.e_probe) *
                tilde_time_factor_a(p_plus, p_e, p_N, pulse, wp, k, nb)};
}

}  // namespace

Complex amplitude_nonbo(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                        const WavePacketParams& wp, const PhysicalConstants& k,
                        const NonBoParams& nb) {
    const NonBoPaths paths = nonbo_paths(p_e, p_N, pulse, wp, k, nb);
    return nonbo_prefactor(pulse, k, nb) * (paths.first - paths.second);
}

InterferenceTerms probability_nonbo_expanded(const Vec3& p_e, const Vec3& p_N,
                                             const PulseParams& pulse, const WavePacketParams& wp,
                                             const PhysicalConstants& k, const NonBoParams& nb) {
    const NonBoPaths paths = nonbo_paths(p_e, p_N, pulse, wp, k, nb);
    InterferenceTerms out;
    out.phase = std::arg(paths.first * std::conj(paths.second));
    out.direct = std::norm(paths.first) + std::norm(paths.second);
    out.cross = -2.0 * std::abs(paths.first) * std::abs(paths.second) * std::cos(out.phase);
    out.total = out.direct + out.cross;
    return out;
}

double closed_form_nonbo_phase(const Vec3& p_e, const Vec3& p_N, const PulseParams& pulse,
                               double r0, const NonBoParams& nb) {
    const auto [p_plus, p_minus] = shifted_momenta(p_N, p_e);
    const double atomic = atomic_phase(p_e + nb.alpha * p_minus, pulse.e_probe) -
                          atomic_phase(p_e - nb.alpha * p_plus, pulse.e_probe);
    return (p_plus.norm() - p_minus.norm()) * r0 + atomic +
           dot(p_e, p_N) / nb.mu_dprime * pulse.t_c;
}

}  // namespace h2diss
