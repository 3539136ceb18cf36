#pragma once

#include "h2diss/params.hpp"
#include "h2diss/special_functions.hpp"

namespace h2diss {

/// Momentum-space nuclear wave packet
///   C_N cos(theta_p)/|p| exp(-dR^2 (|p| - p0)^2 / 2) exp(i (p0 - |p|) R0),
/// theta_p measured from the pump polarization.
/// Throws std::invalid_argument for p = 0.
[[nodiscard]] Complex wavepacket_amplitude(const Vec3& p, const WavePacketParams& wp);

}  // namespace h2diss
