#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "h2diss/nonbo.hpp"
#include "h2diss/scan_spec.hpp"

namespace h2diss {

/// Every scalar a grid point depends on, in atomic units.
struct PointState {
    std::array<double, 14> values{};

    [[nodiscard]] double get(Variable v) const { return values[static_cast<std::size_t>(v)]; }
    void set(Variable v, double x) { values[static_cast<std::size_t>(v)] = x; }
};

struct AxisPlan {
    Variable variable = Variable::t_c;
    ScanAxis axis;
};

inline constexpr std::size_t kValueColumns = 4;

/// Immutable description of a grid evaluation, built from a validated spec.
/// Rows are row-major over the axes (first axis slowest).
struct GridPlan {
    Scenario scenario = Scenario::custom;
    Model model = Model::bo_exact;
    Parity parity = Parity::ungerade;
    Geometry geometry;
    Vec3 e_perp;   // plane_normal x e_probe
    Vec3 n_perp;   // plane_normal x n_dir
    bool uses_p1 = false;
    double proton_mass = kProtonMass;
    ElectronTermMass nonbo_electron_term = ElectronTermMass::m_e_prime;
    PointState base;
    std::vector<AxisPlan> axes;

    [[nodiscard]] static GridPlan from_spec(const ScanSpec& spec);
    [[nodiscard]] std::size_t rows() const;
    [[nodiscard]] PointState point(std::size_t row) const;
};

/// Column names of the values produced for `scenario`.
[[nodiscard]] std::array<const char*, kValueColumns> value_column_names(Scenario scenario);

/// Evaluates one grid row into `out` (kValueColumns entries). Throws on
/// invalid physics input.
void evaluate_point(const GridPlan& plan, const PointState& point, std::span<double> out);

/// Serial reference evaluation of the whole grid, row-major,
/// rows() * kValueColumns values.
[[nodiscard]] std::vector<double> evaluate_grid_reference(const GridPlan& plan);

/// OpenMP evaluation with `workers` threads (<= 0: OpenMP default).
/// Bit-identical to evaluate_grid_reference().
[[nodiscard]] std::vector<double> evaluate_grid(const GridPlan& plan, int workers);

}  // namespace h2diss
