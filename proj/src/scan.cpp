#include "h2diss/scan.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "h2diss/grid_kernels.hpp"

namespace h2diss {
namespace {

using nlohmann::json;

json constants_json(const PhysicalConstants& k) {
    return {{"m_e", k.m_e},           {"m_p", k.m_p},       {"c", k.c},
            {"i_p", k.i_p},           {"m_e_prime", k.m_e_prime}, {"mu", k.mu},
            {"kappa", k.kappa},       {"m_e_dprime", k.m_e_dprime},
            {"mu_dprime", k.mu_dprime}, {"alpha", k.alpha}};
}

// Derived inputs that are constant over the grid. Swept inputs are listed
// by name instead.
json resolved_json(const ScanSpec& spec, const GridPlan& plan) {
    json r;
    const auto swept = [&spec](Variable v) {
        for (const ScanAxis& a : spec.axes) {
            if (a.quantity.variable == v) return true;
        }
        return false;
    };
    const PointState& s = plan.base;
    const PhysicalConstants k = make_constants(plan.proton_mass, s.get(Variable::i_p));
    json swept_names = json::array();
    for (const ScanAxis& a : spec.axes) swept_names.push_back(to_string(a.quantity.variable));
    r["swept"] = swept_names;

    for (Variable v : {Variable::omega, Variable::tau, Variable::p0, Variable::delta_r,
                       Variable::r0, Variable::a0, Variable::i_p}) {
        if (spec.sets(v) && !swept(v)) r[to_string(v) + "_au"] = s.get(v);
    }
    if (spec.sets(Variable::p0) && spec.sets(Variable::delta_r) && !swept(Variable::p0) &&
        !swept(Variable::delta_r)) {
        r["c_n"] = WavePacketParams::normalization(s.get(Variable::p0), s.get(Variable::delta_r));
    }
    if (spec.sets(Variable::tau) && !swept(Variable::tau) && !swept(Variable::a0)) {
        PulseParams pulse;
        pulse.a0 = s.get(Variable::a0);
        pulse.tau = s.get(Variable::tau);
        const double n2 = bo_prefactor(pulse, k);
        const double n2_tilde = nonbo_prefactor(pulse, k, NonBoParams::from(k));
        r["bo_prefactor"] = n2;
        r["nonbo_prefactor"] = n2_tilde;
        r["nonbo_to_bo_prefactor_ratio"] = n2_tilde / n2;
    }
    return r;
}

}  // namespace

ScanResult run_scan(const ScanSpec& spec, int workers) {
    const GridPlan plan = GridPlan::from_spec(spec);
    const int threads = workers > 0 ? workers : omp_get_max_threads();

    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> values = evaluate_grid(plan, threads);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ScanResult result;
    for (const AxisPlan& a : plan.axes) result.columns.push_back(a.axis.quantity.name);
    result.axis_columns = plan.axes.size();
    for (const char* name : value_column_names(plan.scenario)) result.columns.emplace_back(name);

    const std::size_t rows = plan.rows();
    const std::size_t width = result.columns.size();
    result.table.resize(rows * width);
    for (std::size_t row = 0; row < rows; ++row) {
        std::size_t rest = row;
        for (std::size_t i = plan.axes.size(); i-- > 0;) {
            const ScanAxis& a = plan.axes[i].axis;
            result.table[row * width + i] = a.value(rest % a.count);
            rest /= a.count;
        }
        for (std::size_t c = 0; c < kValueColumns; ++c) {
            const double v = values[row * kValueColumns + c];
            if (!std::isfinite(v)) {
                throw std::runtime_error("grid row " + std::to_string(row) + ": non-finite " +
                                         result.columns[result.axis_columns + c]);
            }
            result.table[row * width + result.axis_columns + c] = v;
        }
    }

    const PhysicalConstants k = make_constants(plan.proton_mass, plan.base.get(Variable::i_p));
    json meta;
    meta["generator"] = "h2diss";
    meta["schema_version"] = kScanSchemaVersion;
    meta["scenario"] = to_string(spec.scenario);
    meta["model"] = to_string(spec.model);
    meta["parity"] = to_string(spec.parity);
    if (!spec.preset.empty()) meta["preset"] = spec.preset;
    meta["rows"] = rows;
    meta["columns"] = result.columns;
    meta["constants"] = constants_json(k);
    meta["resolved"] = resolved_json(spec, plan);
    meta["model_flags"] = {
        {"nonbo_electron_term",
         spec.nonbo_electron_term == ElectronTermMass::m_e_prime ? "m_e_prime" : "m_e_dprime"},
        {"probability_excludes_prefactor", spec.scenario != Scenario::fixed_nuclei}};
    meta["spec"] = spec_to_json(spec);
    meta["timing"] = {{"seconds", seconds}, {"workers", threads}};
    result.metadata = std::move(meta);
    return result;
}

}  // namespace h2diss
