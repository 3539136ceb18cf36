#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h2diss/approx_legendre.hpp"
#include "h2diss/constants.hpp"
#include "h2diss/scan.hpp"
#include "h2diss/scan_spec.hpp"

namespace {

using namespace h2diss;

struct ScanOptions {
    std::string spec_path;
    std::string preset;
    std::string out;
    std::string format;
    std::string model;
    int workers = 0;
};

struct MinimaOptions {
    std::string trace_path;
    double p_e = 0.0;
    double theta = 0.0;
    std::optional<int> first_order;
    std::optional<double> r_start;
    std::string time_column;
    std::string value_column = "total";
};

struct BetasOptions {
    double p_e = 0.0;
    std::string rn_range;
    std::string form = "exact";
};

void print_row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::cout << (i ? "," : "") << format_double(values[i]);
    }
    std::cout << '\n';
}

int run_scan_command(const ScanOptions& o) {
    const std::optional<std::string> preset =
        o.preset.empty() ? std::nullopt : std::optional<std::string>(o.preset);
    ScanSpec spec;
    if (!o.spec_path.empty()) {
        spec = load_spec(o.spec_path, preset);
    } else if (preset) {
        spec = preset_spec(*preset);
    } else {
        throw std::invalid_argument("scan: give a spec file or --preset");
    }
    if (!o.model.empty()) {
        spec.model = parse_model(o.model);
        validate_spec(spec);
    }
    if (!o.format.empty()) spec.format = parse_format(o.format);
    std::string out = !o.out.empty() ? o.out : spec.output_path;
    if (out.empty()) out = std::string("scan.") + to_string(spec.format);

    const ScanResult result = run_scan(spec, o.workers);
    write_result(result, out, spec.format);
    std::cerr << "wrote " << result.rows() << " rows to " << out << " (metadata "
              << metadata_path(out).string() << ", "
              << result.metadata["timing"]["seconds"].get<double>() << " s on "
              << result.metadata["timing"]["workers"].get<int>() << " threads)\n";
    return 0;
}

int run_minima_command(const MinimaOptions& o) {
    const CsvTable table = read_csv(o.trace_path);
    const std::string time_name = o.time_column.empty() ? table.header.at(0) : o.time_column;
    const std::size_t t_col = table.column(time_name);
    const std::size_t v_col = table.column(o.value_column);
    const bool fs = time_name.size() > 3 && time_name.ends_with("_fs");

    std::vector<TracePoint> trace;
    trace.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        trace.push_back({fs ? fs_to_au(row[t_col]) : row[t_col], row[v_col]});
    }
    int first = 1;
    if (o.first_order) first = *o.first_order;
    else if (o.r_start) first = first_fringe_order(o.p_e, o.theta, *o.r_start);

    const auto minima = find_minima(trace, first);
    const auto trajectory = infer_trajectory(minima, o.p_e, o.theta);
    std::cout << "# minima of column " << o.value_column << " versus " << time_name << '\n';
    std::cout << "t_c_au,t_c_fs,order,r_n_au\n";
    for (std::size_t i = 0; i < minima.size(); ++i) {
        print_row({minima[i].t_c, au_to_fs(minima[i].t_c), static_cast<double>(minima[i].order),
                   trajectory[i].r_n});
    }
    return 0;
}

int run_betas_command(const BetasOptions& o) {
    double a = 0.0;
    double b = 0.0;
    long n = 0;
    char tail = 0;
    if (std::sscanf(o.rn_range.c_str(), "%lf:%lf:%ld%c", &a, &b, &n, &tail) != 3 || n < 1 ||
        !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("--rn-range must look like a:b:n with n >= 1");
    }
    const BetaForm form = o.form == "asymptotic" ? BetaForm::asymptotic : BetaForm::exact;
    std::cout << "r_n_au,x,beta0,beta2,beta4\n";
    for (long i = 0; i < n; ++i) {
        const double r = n == 1 ? a : (i + 1 == n ? b : a + (b - a) * double(i) / double(n - 1));
        const Betas betas = beta_coefficients(o.p_e, r, form);
        print_row({r, o.p_e * r, betas.beta0, betas.beta2, betas.beta4});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pump-probe dissociative ionization of H2+: grid scans and fringe analysis"};
    app.require_subcommand(1);

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan", "Evaluate a model over a parameter grid");
    scan_cmd->add_option("spec", scan.spec_path, "JSON scan spec")->check(CLI::ExistingFile);
    scan_cmd->add_option("--preset", scan.preset, "Built-in scan")
        ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6"}));
    scan_cmd->add_option("--out", scan.out, "Output path (default: spec output.path)");
    scan_cmd->add_option("--format", scan.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--workers", scan.workers, "Threads (0: OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--model", scan.model, "Override the spec model")
        ->check(CLI::IsMember({"bo_exact", "bo_approx", "nonbo"}));

    MinimaOptions minima;
    auto* minima_cmd = app.add_subcommand("minima", "Fringe minima of a delay trace and R_N(t_c)");
    minima_cmd->add_option("trace", minima.trace_path, "Trace CSV")
        ->required()
        ->check(CLI::ExistingFile);
    minima_cmd->add_option("--pe", minima.p_e, "Electron momentum (a.u.)")->required();
    minima_cmd->add_option("--theta", minima.theta, "Angle between p_e and p_N (rad)")->required();
    auto* first_opt =
        minima_cmd->add_option("--first-order", minima.first_order, "Order of the first minimum");
    minima_cmd->add_option("--r-start", minima.r_start,
                           "Known separation (a.u.) at the trace start; sets the first order")
        ->excludes(first_opt);
    minima_cmd->add_option("--time-column", minima.time_column, "Delay column (default: first)");
    minima_cmd->add_option("--column", minima.value_column, "Value column");

    BetasOptions betas;
    auto* betas_cmd = app.add_subcommand("betas", "Legendre coefficients b0, b2, b4 versus R_N");
    betas_cmd->add_option("--pe", betas.p_e, "Electron momentum (a.u.)")->required();
    betas_cmd->add_option("--rn-range", betas.rn_range, "R_N range a:b:n (a.u.)")->required();
    betas_cmd->add_option("--form", betas.form, "Coefficient form")
        ->check(CLI::IsMember({"exact", "asymptotic"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*scan_cmd) return run_scan_command(scan);
        if (*minima_cmd) return run_minima_command(minima);
        if (*betas_cmd) return run_betas_command(betas);
    } catch (const SpecError& e) {
        std::cerr << "spec error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
