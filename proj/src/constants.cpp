#include "h2diss/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace h2diss {

PhysicalConstants make_constants(double m_p, double i_p) {
    if (!(m_p > 0.0)) throw std::invalid_argument("proton mass must be positive");
    if (!(i_p > 0.0)) throw std::invalid_argument("ionization potential must be positive");

    PhysicalConstants k;
    const double m_e = k.m_e;
    k.m_p = m_p;
    k.i_p = i_p;
    k.m_e_prime = 2.0 * m_p * m_e / (2.0 * m_p + m_e);
    k.mu = m_p / 2.0;
    k.kappa = 1.0 + m_e / (2.0 * m_p + m_e);
    k.m_e_dprime = m_p * m_e / (m_p + m_e);
    k.mu_dprime = m_p * (m_p + m_e) / (2.0 * m_p + m_e);
    k.alpha = m_e / (m_e + m_p);
    return k;
}

double wavelength_nm_to_omega(double lambda_nm) {
    if (!(lambda_nm > 0.0)) throw std::invalid_argument("wavelength must be positive");
    if (std::isinf(lambda_nm)) return 0.0;
    return 2.0 * kPi * kSpeedOfLight / (lambda_nm / kBohrInNm);
}

double omega_to_wavelength_nm(double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("frequency must be positive");
    return 2.0 * kPi * kSpeedOfLight / omega * kBohrInNm;
}

double fwhm_fs_to_tau_au(double tau_fwhm_fs) {
    if (!(tau_fwhm_fs > 0.0)) throw std::invalid_argument("pulse duration must be positive");
    return tau_fwhm_fs / (2.0 * std::sqrt(std::log(2.0))) * kFsInAu;
}

}  // namespace h2diss
