#pragma once

namespace h2diss {

// Laboratory-to-atomic unit conversions. Single source for every conversion
// in the library.
inline constexpr double kSpeedOfLight = 137.036;    // a.u.
inline constexpr double kBohrInNm = 0.0529177;      // nm per bohr
inline constexpr double kFsInAu = 41.3414;          // a.u. of time per fs
inline constexpr double kProtonMass = 1836.15;      // electron masses
inline constexpr double kHydrogenIp = 0.5;          // hartree, H(1s)
inline constexpr double kPi = 3.14159265358979323846;

/// Masses and coupling constants of the p-p-e system in atomic units.
///
/// Two Jacobi coordinate sets are in play: the electron measured from the
/// proton-pair centre of mass (m_e_prime, mu, kappa) and the electron
/// measured from its own proton (m_e_dprime, mu_dprime, alpha).
struct PhysicalConstants {
    double m_e = 1.0;
    double m_p = kProtonMass;
    double c = kSpeedOfLight;
    double i_p = kHydrogenIp;
    double m_e_prime = 0.0;   // electron / proton-pair reduced mass
    double mu = 0.0;          // proton-proton reduced mass
    double kappa = 0.0;       // dipole coupling factor in the interaction
    double m_e_dprime = 0.0;  // electron reduced mass in hydrogen
    double mu_dprime = 0.0;   // H-atom / proton reduced mass
    double alpha = 0.0;       // m_e / (m_e + m_p)
};

/// Builds the constant set with all reduced masses derived from `m_p`.
/// Throws std::invalid_argument for non-positive masses.
[[nodiscard]] PhysicalConstants make_constants(double m_p = kProtonMass,
                                               double i_p = kHydrogenIp);

[[nodiscard]] double wavelength_nm_to_omega(double lambda_nm);
[[nodiscard]] double omega_to_wavelength_nm(double omega);

/// Intensity FWHM in fs to the Gaussian field parameter tau in a.u.
[[nodiscard]] double fwhm_fs_to_tau_au(double tau_fwhm_fs);

[[nodiscard]] constexpr double fs_to_au(double t_fs) { return t_fs * kFsInAu; }
[[nodiscard]] constexpr double au_to_fs(double t_au) { return t_au / kFsInAu; }

}  // namespace h2diss
