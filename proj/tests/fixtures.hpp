#pragma once

// Parameter sets shared by the unit and acceptance tests.

#include <random>

#include "h2diss/amplitude.hpp"
#include "h2diss/constants.hpp"
#include "h2diss/params.hpp"

namespace fixtures {

struct Setup {
    h2diss::PhysicalConstants k;
    h2diss::PulseParams pulse;
    h2diss::WavePacketParams wp;
    double p_e = 0.0;
    double p_n = 0.0;
};

// 60 nm, 2.4 fs probe; p0 = p_N = 14.8, dR = 3, R0 = 12; everything along z.
inline Setup fig3() {
    Setup s;
    s.k = h2diss::make_constants();
    s.pulse.omega = h2diss::wavelength_nm_to_omega(60.0);
    s.pulse.tau = h2diss::fwhm_fs_to_tau_au(2.4);
    s.pulse.e_probe = {0, 0, 1};
    s.wp = h2diss::WavePacketParams::normalized(14.8, 3.0, 12.0, {0, 0, 1});
    s.p_e = 0.72;
    s.p_n = 14.8;
    return s;
}

// 15 nm, 0.24 fs probe with a narrower packet.
inline Setup fig5() {
    Setup s = fig3();
    s.pulse.omega = h2diss::wavelength_nm_to_omega(15.0);
    s.pulse.tau = h2diss::fwhm_fs_to_tau_au(0.24);
    s.wp = h2diss::WavePacketParams::normalized(14.8, 1.0, 12.0, {0, 0, 1});
    s.p_e = 2.25;
    return s;
}

struct Draw {
    Setup setup;
    h2diss::Vec3 p_e;
    h2diss::Vec3 p_n;
};

// Random parameter draw spanning the figure regimes: either probe, delays
// up to 80 fs, arbitrary polarizations and momentum directions.
inline Draw random_draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> n(0.0, 1.0);
    const auto unit = [&] {
        h2diss::Vec3 v{n(rng), n(rng), n(rng)};
        return v / v.norm();
    };
    Draw d;
    d.setup = u(rng) < 0.5 ? fig3() : fig5();
    d.setup.pulse.e_probe = u(rng) < 0.3 ? h2diss::Vec3{0, 0, 1} : unit();
    d.setup.pulse.t_c = h2diss::fs_to_au(80.0 * u(rng));
    d.setup.wp.e_pump = u(rng) < 0.3 ? h2diss::Vec3{0, 0, 1} : unit();
    const double p_e = d.setup.p_e * (0.8 + 0.4 * u(rng));
    const double p_n = 13.5 + 2.0 * u(rng);
    d.p_e = p_e * unit();
    d.p_n = p_n * unit();
    return d;
}

}  // namespace fixtures
