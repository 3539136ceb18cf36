#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "h2diss/vec3.hpp"

namespace h2diss {

// Large-p_N picture: the interference phase becomes p_e . R_N(t_c) with the
// classical trajectory R_N = R0 p_N/|p_N| + p_N t_c / mu.

[[nodiscard]] Vec3 r_n_vector(double t_c, const Vec3& p_N, double r0, double mu);

/// p_e . R_N(t_c, p_N).
[[nodiscard]] double approx_phase(double t_c, const Vec3& p_e, const Vec3& p_N, double r0,
                                  double mu);

/// cos^2(theta_e) sin^2[p_e cos(theta_pe) R_N / 2] cos^2(theta_p), arbitrary units.
[[nodiscard]] double approx_probability(double theta_e, double theta_pe, double theta_p,
                                        double p_e_mag, double r_n_mag);

enum class BetaForm { exact, asymptotic };

/// Coefficients of the expansion
///   cos^2(th) [1 - cos(x cos th)] ~ b0 + b2 P2(cos th) + b4 P4(cos th).
struct Betas {
    double beta0 = 0.0;
    double beta2 = 0.0;
    double beta4 = 0.0;
};

/// x = p_e * r_n. The asymptotic form keeps only the leading sin(x)/x
/// behaviour and is meant for x >> 1.
[[nodiscard]] Betas beta_coefficients(double p_e_mag, double r_n_mag, BetaForm form);

/// Legendre coefficient (2l+1)/2 \int_{-1}^{1} g(u) P_l(u) du by
/// Gauss-Legendre quadrature.
[[nodiscard]] double legendre_projection(const std::function<double(double)>& g, int l,
                                         std::size_t nodes);

/// b0, b2, b4 of an arbitrary angular distribution g(cos theta).
[[nodiscard]] Betas project_betas(const std::function<double(double)>& g, std::size_t nodes);

struct TracePoint {
    double t_c = 0.0;
    double value = 0.0;
};

/// Fringe minimum with its absolute interference order n.
struct FringeMinimum {
    double t_c = 0.0;
    int order = 0;
};

struct TrajectoryPoint {
    double t_c = 0.0;
    double r_n = 0.0;
};

/// Local minima of a delay trace sorted in t_c, refined by a three-point
/// parabola. Orders are consecutive starting at `first_order`; a delay
/// trace alone cannot fix the absolute order (see first_fringe_order()).
/// Throws std::invalid_argument for fewer than three points or an unsorted
/// trace.
[[nodiscard]] std::vector<FringeMinimum> find_minima(std::span<const TracePoint> trace,
                                                     int first_order = 1);

/// Order of the first minimum after a trace start where the separation is
/// known to be `r_start`: the smallest n with 2 n pi > p_e cos(theta) r_start.
[[nodiscard]] int first_fringe_order(double p_e_mag, double theta_pe, double r_start);

/// r_n = 2 n pi / (p_e cos theta_pe) for every minimum.
/// Throws std::invalid_argument at grazing angles (cos theta_pe ~ 0) or for
/// non-positive orders.
[[nodiscard]] std::vector<TrajectoryPoint> infer_trajectory(std::span<const FringeMinimum> minima,
                                                            double p_e_mag, double theta_pe);

}  // namespace h2diss
