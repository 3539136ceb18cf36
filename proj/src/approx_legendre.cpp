#include "h2diss/approx_legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "h2diss/constants.hpp"
#include "h2diss/quadrature.hpp"
#include "h2diss/special_functions.hpp"

namespace h2diss {

Vec3 r_n_vector(double t_c, const Vec3& p_N, double r0, double mu) {
    const double pn = p_N.norm();
    if (!(pn > 0.0)) throw std::invalid_argument("r_n_vector: zero relative nuclear momentum");
    return r0 / pn * p_N + t_c / mu * p_N;
}

double approx_phase(double t_c, const Vec3& p_e, const Vec3& p_N, double r0, double mu) {
    return dot(p_e, r_n_vector(t_c, p_N, r0, mu));
}

double approx_probability(double theta_e, double theta_pe, double theta_p, double p_e_mag,
                          double r_n_mag) {
    const double ce = std::cos(theta_e);
    const double cp = std::cos(theta_p);
    const double s = std::sin(0.5 * p_e_mag * std::cos(theta_pe) * r_n_mag);
    return ce * ce * s * s * cp * cp;
}

Betas beta_coefficients(double p_e_mag, double r_n_mag, BetaForm form) {
    const double x = p_e_mag * r_n_mag;
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("beta_coefficients: p_e * r_n must be finite and >= 0");
    }
    switch (form) {
        case BetaForm::exact: {
            const double j0 = spherical_bessel(0, x);
            const double j2 = spherical_bessel(2, x);
            const double j4 = spherical_bessel(4, x);
            const double j6 = spherical_bessel(6, x);
            return {(1.0 - j0 + 2.0 * j2) / 3.0,
                    (2.0 - 2.0 * j0 + 55.0 / 7.0 * j2 - 36.0 / 7.0 * j4) / 3.0,
                    30.0 / 11.0 * j6 - 351.0 / 77.0 * j4 + 12.0 / 7.0 * j2};
        }
        case BetaForm::asymptotic: {
            if (!(x > 0.0)) throw std::invalid_argument("asymptotic betas need p_e * r_n > 0");
            // j_l(x) ~ sin(x - l pi/2)/x applied to the exact forms.
            const double s = std::sin(x) / x;
            return {(1.0 - 3.0 * s) / 3.0, (2.0 - 15.0 * s) / 3.0, -9.0 * s};
        }
    }
    throw std::invalid_argument("beta_coefficients: unknown form");
}

double legendre_projection(const std::function<double(double)>& g, int l, std::size_t nodes) {
    const QuadratureRule rule = gauss_legendre(nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        sum += rule.weights[i] * g(rule.nodes[i]) * legendre_p(l, rule.nodes[i]);
    }
    return 0.5 * (2.0 * l + 1.0) * sum;
}

Betas project_betas(const std::function<double(double)>& g, std::size_t nodes) {
    const QuadratureRule rule = gauss_legendre(nodes);
    Betas b;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double u = rule.nodes[i];
        const double wg = rule.weights[i] * g(u);
        b.beta0 += wg;
        b.beta2 += wg * legendre_p(2, u);
        b.beta4 += wg * legendre_p(4, u);
    }
    b.beta0 *= 0.5;
    b.beta2 *= 2.5;
    b.beta4 *= 4.5;
    return b;
}

std::vector<FringeMinimum> find_minima(std::span<const TracePoint> trace, int first_order) {
    if (trace.size() < 3) throw std::invalid_argument("find_minima needs at least three points");
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (!(trace[i].t_c > trace[i - 1].t_c)) {
            throw std::invalid_argument("find_minima needs a trace strictly increasing in t_c");
        }
    }

    std::vector<FringeMinimum> minima;
    int order = first_order;
    for (std::size_t i = 1; i + 1 < trace.size(); ++i) {
        const double y0 = trace[i - 1].value;
        const double y1 = trace[i].value;
        const double y2 = trace[i + 1].value;
        if (!(y1 < y0 && y1 <= y2)) continue;

        // Parabola y = y1 + b d + a d^2 through the three samples, d = t - t1.
        const double h0 = trace[i - 1].t_c - trace[i].t_c;
        const double h2 = trace[i + 1].t_c - trace[i].t_c;
        const double s0 = (y0 - y1) / h0;
        const double s2 = (y2 - y1) / h2;
        const double a = (s0 - s2) / (h0 - h2);
        const double b = s0 - a * h0;
        double shift = a > 0.0 ? -b / (2.0 * a) : 0.0;
        shift = std::clamp(shift, h0, h2);
        minima.push_back({trace[i].t_c + shift, order++});
    }
    return minima;
}

int first_fringe_order(double p_e_mag, double theta_pe, double r_start) {
    const double x = p_e_mag * std::abs(std::cos(theta_pe)) * r_start;
    return static_cast<int>(std::floor(x / (2.0 * kPi))) + 1;
}

std::vector<TrajectoryPoint> infer_trajectory(std::span<const FringeMinimum> minima,
                                              double p_e_mag, double theta_pe) {
    const double projected = p_e_mag * std::abs(std::cos(theta_pe));
    if (!(projected > 1e-12 * std::max(p_e_mag, 1.0))) {
        throw std::invalid_argument("infer_trajectory: grazing angle, p_e cos(theta) ~ 0");
    }
    std::vector<TrajectoryPoint> out;
    out.reserve(minima.size());
    for (const FringeMinimum& m : minima) {
        if (m.order <= 0) throw std::invalid_argument("infer_trajectory: orders must be positive");
        out.push_back({m.t_c, 2.0 * kPi * m.order / projected});
    }
    return out;
}

}  // namespace h2diss
