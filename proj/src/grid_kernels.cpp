#include "h2diss/grid_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "h2diss/approx_legendre.hpp"
#include "h2diss/atomic.hpp"
#include "h2diss/fixed_nuclei.hpp"

namespace h2diss {
namespace {

constexpr std::size_t kProjectionNodes = 128;

Vec3 rotate_in_plane(const Vec3& axis, const Vec3& perp, double angle) {
    return std::cos(angle) * axis + std::sin(angle) * perp;
}

double angle_between(const Vec3& a, const Vec3& b) {
    const double c = dot(a, b) / (a.norm() * b.norm());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

struct PointInputs {
    PhysicalConstants k;
    PulseParams pulse;
    WavePacketParams wp;
    Vec3 p_e;
    Vec3 p_n;
};

PointInputs resolve(const GridPlan& plan, const PointState& s) {
    PointInputs in;
    in.k = make_constants(plan.proton_mass, s.get(Variable::i_p));
    in.pulse.a0 = s.get(Variable::a0);
    in.pulse.e_probe = plan.geometry.e_probe;
    in.pulse.omega = s.get(Variable::omega);
    in.pulse.tau = s.get(Variable::tau);
    in.pulse.t_c = s.get(Variable::t_c);
    in.p_e = s.get(Variable::p_e) *
             rotate_in_plane(plan.geometry.e_probe, plan.e_perp, s.get(Variable::theta_e));
    const Vec3 n_hat = rotate_in_plane(plan.geometry.n_dir, plan.n_perp, s.get(Variable::theta_n));
    in.p_n = plan.uses_p1 ? kinematics_from_measured(s.get(Variable::p1) * n_hat, in.p_e).p_n
                          : s.get(Variable::p_n) * n_hat;
    return in;
}

WavePacketParams packet(const GridPlan& plan, const PointState& s) {
    return WavePacketParams::normalized(s.get(Variable::p0), s.get(Variable::delta_r),
                                        s.get(Variable::r0), plan.geometry.e_pump);
}

void store(std::span<double> out, const InterferenceTerms& t) {
    out[0] = t.total;
    out[1] = t.direct;
    out[2] = t.cross;
    out[3] = t.phase;
}

void evaluate_fixed_nuclei(const GridPlan& plan, const PointState& s, std::span<double> out) {
    const Vec3 e_dir = rotate_in_plane(plan.geometry.e_probe, plan.e_perp, s.get(Variable::theta_e));
    const Vec3 n_hat = rotate_in_plane(plan.geometry.n_dir, plan.n_perp, s.get(Variable::theta_n));
    const Vec3 p_e = s.get(Variable::p_e) * e_dir;
    const Vec3 r_vec = s.get(Variable::r) * n_hat;
    const double direct = std::norm(atomic_amplitude(p_e, plan.geometry.e_probe));
    const double total = fixed_nuclei_probability(p_e, r_vec, plan.geometry.e_probe, plan.parity);
    out[0] = total;
    out[1] = direct;
    out[2] = total - direct;
    out[3] = dot(p_e, r_vec);
}

void evaluate_approx(const GridPlan& plan, const PointInputs& in, double r0,
                     std::span<double> out) {
    const Vec3 r_n = r_n_vector(in.pulse.t_c, in.p_n, r0, in.k.mu);
    const double theta_e = angle_between(in.p_e, plan.geometry.e_probe);
    const double theta_pe = angle_between(in.p_e, in.p_n);
    const double theta_p = angle_between(in.p_n, plan.geometry.e_pump);
    const double ce = std::cos(theta_e);
    const double cp = std::cos(theta_p);
    const double weight = ce * ce * cp * cp;
    const double phase = dot(in.p_e, r_n);
    const double sign = plan.parity == Parity::ungerade ? -1.0 : 1.0;
    out[1] = 0.5 * weight;
    out[2] = sign * 0.5 * weight * std::cos(phase);
    out[0] = plan.parity == Parity::ungerade
                 ? approx_probability(theta_e, theta_pe, theta_p, in.p_e.norm(), r_n.norm())
                 : out[1] + out[2];
    out[3] = std::remainder(phase, 2.0 * kPi);
}

void evaluate_betas(const GridPlan& plan, const PointState& s, const PointInputs& in,
                    std::span<double> out) {
    const double r0 = s.get(Variable::r0);
    const double r_n = r_n_vector(in.pulse.t_c, in.p_n, r0, in.k.mu).norm();
    const double p_e = s.get(Variable::p_e);
    Betas b;
    if (plan.model == Model::bo_approx) {
        b = beta_coefficients(p_e, r_n, BetaForm::exact);
    } else {
        in.pulse.validate(in.k);
        const WavePacketParams wp = packet(plan, s);
        const auto g = [&](double u) {
            const double sin_t = std::sqrt(std::max(0.0, 1.0 - u * u));
            const Vec3 p_vec = p_e * (u * plan.geometry.e_probe + sin_t * plan.e_perp);
            // p_N is held fixed while the electron direction varies.
            return probability_expanded(p_vec, in.p_n, in.pulse, wp, plan.parity, in.k).total;
        };
        b = project_betas(g, kProjectionNodes);
    }
    out[0] = b.beta0;
    out[1] = b.beta2;
    out[2] = b.beta4;
    out[3] = r_n;
}

std::string row_error(std::size_t row, const char* what) {
    return "grid row " + std::to_string(row) + ": " + what;
}

}  // namespace

GridPlan GridPlan::from_spec(const ScanSpec& spec) {
    validate_spec(spec);
    GridPlan plan;
    plan.scenario = spec.scenario;
    plan.model = spec.model;
    plan.parity = spec.parity;
    plan.geometry = spec.geometry;
    plan.e_perp = normalized(cross(spec.geometry.plane_normal, spec.geometry.e_probe));
    plan.n_perp = normalized(cross(spec.geometry.plane_normal, spec.geometry.n_dir));
    plan.uses_p1 = spec.sets(Variable::p1);
    plan.proton_mass = spec.proton_mass;
    plan.nonbo_electron_term = spec.nonbo_electron_term;

    plan.base.set(Variable::a0, 1.0);
    plan.base.set(Variable::i_p, kHydrogenIp);
    for (const FixedValue& f : spec.fixed) {
        plan.base.set(f.quantity.variable, f.quantity.to_atomic(f.value));
    }
    for (const ScanAxis& a : spec.axes) plan.axes.push_back({a.quantity.variable, a});
    return plan;
}

std::size_t GridPlan::rows() const {
    std::size_t n = 1;
    for (const AxisPlan& a : axes) n *= a.axis.count;
    return n;
}

PointState GridPlan::point(std::size_t row) const {
    PointState s = base;
    for (std::size_t i = axes.size(); i-- > 0;) {
        const ScanAxis& a = axes[i].axis;
        s.set(axes[i].variable, a.quantity.to_atomic(a.value(row % a.count)));
        row /= a.count;
    }
    return s;
}

std::array<const char*, kValueColumns> value_column_names(Scenario scenario) {
    if (scenario == Scenario::beta_trace) return {"beta0", "beta2", "beta4", "r_n_au"};
    return {"total", "direct", "cross", "phase"};
}

void evaluate_point(const GridPlan& plan, const PointState& s, std::span<double> out) {
    if (out.size() < kValueColumns) throw std::invalid_argument("evaluate_point: output too small");
    if (plan.scenario == Scenario::fixed_nuclei) {
        evaluate_fixed_nuclei(plan, s, out);
        return;
    }
    const PointInputs in = resolve(plan, s);
    if (plan.scenario == Scenario::beta_trace) {
        evaluate_betas(plan, s, in, out);
        return;
    }
    switch (plan.model) {
        case Model::bo_approx:
            evaluate_approx(plan, in, s.get(Variable::r0), out);
            break;
        case Model::bo_exact:
            in.pulse.validate(in.k);
            store(out, probability_expanded(in.p_e, in.p_n, in.pulse, packet(plan, s), plan.parity,
                                            in.k));
            break;
        case Model::nonbo: {
            in.pulse.validate(in.k);
            NonBoParams nb = NonBoParams::from(in.k);
            nb.electron_term = plan.nonbo_electron_term;
            store(out, probability_nonbo_expanded(in.p_e, in.p_n, in.pulse, packet(plan, s), in.k, nb));
            break;
        }
    }
}

std::vector<double> evaluate_grid_reference(const GridPlan& plan) {
    const std::size_t rows = plan.rows();
    std::vector<double> values(rows * kValueColumns);
    for (std::size_t row = 0; row < rows; ++row) {
        try {
            evaluate_point(plan, plan.point(row),
                           std::span<double>(values).subspan(row * kValueColumns, kValueColumns));
        } catch (const std::exception& e) {
            throw std::runtime_error(row_error(row, e.what()));
        }
    }
    return values;
}

std::vector<double> evaluate_grid(const GridPlan& plan, int workers) {
    const std::size_t rows = plan.rows();
    std::vector<double> values(rows * kValueColumns);
    const int threads = workers > 0 ? workers : omp_get_max_threads();

    // Exceptions must not escape an OpenMP region: keep the lowest failing
    // row so the reported error matches the serial reference.
    std::size_t failed_row = std::numeric_limits<std::size_t>::max();
    std::string failure;
    const auto n = static_cast<std::ptrdiff_t>(rows);

#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto row = static_cast<std::size_t>(i);
        try {
            evaluate_point(plan, plan.point(row),
                           std::span<double>(values).subspan(row * kValueColumns, kValueColumns));
        } catch (const std::exception& e) {
#pragma omp critical(h2diss_grid_failure)
            if (row < failed_row) {
                failed_row = row;
                failure = e.what();
            }
        }
    }
    if (!failure.empty()) throw std::runtime_error(row_error(failed_row, failure.c_str()));
    return values;
}

}  // namespace h2diss
