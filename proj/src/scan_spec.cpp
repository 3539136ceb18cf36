#include "h2diss/scan_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace h2diss {
namespace {

using nlohmann::json;

struct QuantityRule {
    Variable variable;
    std::vector<Unit> units;
};

const std::map<std::string, QuantityRule>& quantity_rules() {
    static const std::map<std::string, QuantityRule> rules = {
        {"t_c", {Variable::t_c, {Unit::fs, Unit::au}}},
        {"p_e", {Variable::p_e, {Unit::au}}},
        {"theta_e", {Variable::theta_e, {Unit::rad, Unit::deg}}},
        {"p_n", {Variable::p_n, {Unit::au}}},
        {"p1", {Variable::p1, {Unit::au}}},
        {"theta_n", {Variable::theta_n, {Unit::rad, Unit::deg}}},
        {"omega", {Variable::omega, {Unit::au}}},
        {"lambda", {Variable::omega, {Unit::nm}}},
        {"tau", {Variable::tau, {Unit::au}}},
        {"tau_fwhm", {Variable::tau, {Unit::fs}}},
        {"delta_r", {Variable::delta_r, {Unit::au}}},
        {"r0", {Variable::r0, {Unit::au}}},
        {"p0", {Variable::p0, {Unit::au}}},
        {"a0", {Variable::a0, {Unit::au}}},
        {"i_p", {Variable::i_p, {Unit::au}}},
        {"r", {Variable::r, {Unit::au}}},
    };
    return rules;
}

std::optional<Unit> parse_unit(const std::string& s) {
    if (s == "au") return Unit::au;
    if (s == "fs") return Unit::fs;
    if (s == "nm") return Unit::nm;
    if (s == "rad") return Unit::rad;
    if (s == "deg") return Unit::deg;
    return std::nullopt;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw SpecError(path + ": " + message);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "must be finite");
    return v;
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

Vec3 parse_unit_vector(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) fail(path, "expected an array of three numbers");
    const Vec3 v{require_number(j[0], path + "[0]"), require_number(j[1], path + "[1]"),
                 require_number(j[2], path + "[2]")};
    const double n = v.norm();
    // Tolerate rounding in hand-written vectors, reject anything else.
    if (std::abs(n - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "polarization/direction must be a unit vector, got |v| = " << n;
        fail(path, msg.str());
    }
    return v / n;
}

template <typename Enum>
Enum parse_enum(const std::string& s, const std::vector<std::pair<const char*, Enum>>& table,
                const std::string& path) {
    for (const auto& [name, value] : table) {
        if (s == name) return value;
    }
    std::string allowed;
    for (const auto& [name, value] : table) allowed += std::string(allowed.empty() ? "" : ", ") + name;
    fail(path, "unknown value '" + s + "' (expected one of: " + allowed + ")");
}

const std::vector<std::pair<const char*, Scenario>> kScenarios = {
    {"angular_vs_delay", Scenario::angular_vs_delay},
    {"electron_spectrum_vs_delay", Scenario::electron_spectrum_vs_delay},
    {"proton_spectrum_vs_delay", Scenario::proton_spectrum_vs_delay},
    {"fixed_nuclei", Scenario::fixed_nuclei},
    {"beta_trace", Scenario::beta_trace},
    {"custom", Scenario::custom}};
const std::vector<std::pair<const char*, Model>> kModels = {
    {"bo_exact", Model::bo_exact}, {"bo_approx", Model::bo_approx}, {"nonbo", Model::nonbo}};
const std::vector<std::pair<const char*, Parity>> kParities = {{"gerade", Parity::gerade},
                                                               {"ungerade", Parity::ungerade}};
const std::vector<std::pair<const char*, OutputFormat>> kFormats = {{"csv", OutputFormat::csv},
                                                                    {"json", OutputFormat::json}};
const std::vector<std::pair<const char*, ElectronTermMass>> kElectronTerms = {
    {"m_e_prime", ElectronTermMass::m_e_prime}, {"m_e_dprime", ElectronTermMass::m_e_dprime}};

template <typename Enum>
std::string enum_name(Enum v, const std::vector<std::pair<const char*, Enum>>& table) {
    for (const auto& [name, value] : table) {
        if (value == v) return name;
    }
    return "?";
}

FixedValue fixed(const std::string& name, double value) {
    return {Quantity::parse(name, "fixed." + name), value};
}

ScanAxis axis(const std::string& name, double min, double max, std::size_t count) {
    return {Quantity::parse(name, "axes"), min, max, count};
}

std::vector<FixedValue> fig3_fixed() {
    return {fixed("lambda_nm", 60.0),   fixed("tau_fwhm_fs", 2.4), fixed("p_n_au", 14.8),
            fixed("p0_au", 14.8),       fixed("p_e_au", 0.72),     fixed("delta_r_au", 3.0),
            fixed("r0_au", 12.0)};
}

void erase_variable(std::vector<FixedValue>& values, Variable v) {
    std::erase_if(values, [v](const FixedValue& f) { return f.quantity.variable == v; });
}

}  // namespace

Quantity Quantity::parse(const std::string& name, const std::string& path) {
    const auto split = name.rfind('_');
    if (split == std::string::npos || split == 0 || split + 1 == name.size()) {
        fail(path, "'" + name + "' needs an explicit unit suffix (e.g. t_c_fs, p_e_au)");
    }
    const std::string base = name.substr(0, split);
    const auto unit = parse_unit(name.substr(split + 1));
    const auto& rules = quantity_rules();
    const auto rule = rules.find(base);
    if (rule == rules.end()) fail(path, "unknown quantity '" + name + "'");
    if (!unit || std::find(rule->second.units.begin(), rule->second.units.end(), *unit) ==
                     rule->second.units.end()) {
        fail(path, "unit not allowed for '" + base + "' in '" + name + "'");
    }
    return {name, rule->second.variable, *unit};
}

double Quantity::to_atomic(double value) const {
    switch (unit) {
        case Unit::au:
        case Unit::rad: return value;
        case Unit::deg: return value * kPi / 180.0;
        case Unit::nm: return wavelength_nm_to_omega(value);
        case Unit::fs: return variable == Variable::tau ? fwhm_fs_to_tau_au(value) : fs_to_au(value);
    }
    return value;
}

std::string to_string(Variable v) {
    static const char* names[] = {"t_c", "p_e",     "theta_e", "p_n", "p1", "theta_n", "omega",
                                  "tau", "delta_r", "r0",      "p0",  "a0", "i_p",     "r"};
    return names[static_cast<std::size_t>(v)];
}
std::string to_string(Scenario s) { return enum_name(s, kScenarios); }
std::string to_string(Model m) { return enum_name(m, kModels); }
std::string to_string(Parity p) { return enum_name(p, kParities); }
std::string to_string(OutputFormat f) { return enum_name(f, kFormats); }

Model parse_model(const std::string& s) { return parse_enum(s, kModels, "model"); }
OutputFormat parse_format(const std::string& s) { return parse_enum(s, kFormats, "format"); }

double ScanAxis::value(std::size_t i) const {
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

bool ScanSpec::sets(Variable v) const {
    const auto match = [v](const auto& e) { return e.quantity.variable == v; };
    return std::any_of(axes.begin(), axes.end(), match) ||
           std::any_of(fixed.begin(), fixed.end(), match);
}

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig5", "fig6"}; }

ScanSpec preset_spec(const std::string& name) {
    ScanSpec s;
    s.preset = name;
    s.model = Model::bo_exact;
    s.parity = Parity::ungerade;
    s.output_path = name + ".csv";
    if (name == "fig3" || name == "fig4") {
        // Electron angular distribution versus delay. fig4 rotates the probe
        // polarization perpendicular to the pump; p_N stays along the pump.
        s.scenario = Scenario::angular_vs_delay;
        if (name == "fig4") s.geometry.e_probe = {1, 0, 0};
        s.fixed = fig3_fixed();
        s.axes = {axis("theta_e_deg", 0.0, 180.0, 361), axis("t_c_fs", 0.0, 80.0, 801)};
    } else if (name == "fig5") {
        s.scenario = Scenario::electron_spectrum_vs_delay;
        s.fixed = {fixed("lambda_nm", 15.0), fixed("tau_fwhm_fs", 0.24), fixed("p_n_au", 14.8),
                   fixed("p0_au", 14.8),     fixed("delta_r_au", 1.0),   fixed("r0_au", 12.0),
                   fixed("theta_e_deg", 0.0)};
        s.axes = {axis("p_e_au", 1.8, 2.7, 451), axis("t_c_fs", 0.0, 80.0, 801)};
    } else if (name == "fig6") {
        s.scenario = Scenario::proton_spectrum_vs_delay;
        s.fixed = fig3_fixed();
        erase_variable(s.fixed, Variable::p_n);
        s.fixed.push_back(fixed("theta_e_deg", 0.0));
        s.axes = {axis("p1_au", 13.0, 16.0, 601), axis("t_c_fs", 0.0, 80.0, 801)};
    } else {
        fail("preset", "unknown preset '" + name + "' (expected fig3, fig4, fig5 or fig6)");
    }
    return s;
}

ScanSpec parse_spec(const json& doc, const std::optional<std::string>& preset_override) {
    if (!doc.is_object()) fail("$", "spec must be a JSON object");

    static const std::vector<std::string> known = {"schema_version", "preset", "scenario", "model",
                                                   "parity", "geometry", "axes", "fixed",
                                                   "constants", "nonbo", "output"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            fail(key, "unknown key");
        }
    }

    if (!doc.contains("schema_version")) fail("schema_version", "required");
    const json& version = doc["schema_version"];
    if (!version.is_number_integer() || version.get<int>() != kScanSchemaVersion) {
        fail("schema_version", "unsupported version (expected " +
                                   std::to_string(kScanSchemaVersion) + ")");
    }

    std::optional<std::string> preset = preset_override;
    if (!preset && doc.contains("preset")) preset = require_string(doc["preset"], "preset");

    ScanSpec spec = preset ? preset_spec(*preset) : ScanSpec{};
    const std::size_t base_fixed = spec.fixed.size();
    if (!preset && !doc.contains("scenario")) fail("scenario", "required without a preset");

    if (doc.contains("scenario")) {
        spec.scenario = parse_enum(require_string(doc["scenario"], "scenario"), kScenarios, "scenario");
    }
    if (doc.contains("model")) {
        spec.model = parse_enum(require_string(doc["model"], "model"), kModels, "model");
    }
    if (doc.contains("parity")) {
        spec.parity = parse_enum(require_string(doc["parity"], "parity"), kParities, "parity");
    }

    if (doc.contains("geometry")) {
        const json& g = doc["geometry"];
        if (!g.is_object()) fail("geometry", "expected an object");
        for (const auto& [key, value] : g.items()) {
            const std::string path = "geometry." + key;
            if (key == "e_pump") spec.geometry.e_pump = parse_unit_vector(value, path);
            else if (key == "e_probe") spec.geometry.e_probe = parse_unit_vector(value, path);
            else if (key == "n_dir") spec.geometry.n_dir = parse_unit_vector(value, path);
            else if (key == "plane_normal") spec.geometry.plane_normal = parse_unit_vector(value, path);
            else fail(path, "unknown key");
        }
    }

    std::vector<FixedValue> user_fixed;
    if (doc.contains("fixed")) {
        const json& f = doc["fixed"];
        if (!f.is_object()) fail("fixed", "expected an object of name -> number");
        for (const auto& [key, value] : f.items()) {
            const std::string path = "fixed." + key;
            user_fixed.push_back({Quantity::parse(key, path), require_number(value, path)});
        }
    }

    bool user_axes = false;
    if (doc.contains("axes")) {
        const json& a = doc["axes"];
        if (!a.is_array()) fail("axes", "expected an array");
        user_axes = true;
        spec.axes.clear();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string path = "axes[" + std::to_string(i) + "]";
            const json& e = a[i];
            if (!e.is_object()) fail(path, "expected an object");
            for (const auto& [key, value] : e.items()) {
                if (key != "name" && key != "min" && key != "max" && key != "count") {
                    fail(path + "." + key, "unknown key");
                }
            }
            for (const char* key : {"name", "min", "max", "count"}) {
                if (!e.contains(key)) fail(path + "." + key, "required");
            }
            if (!e["count"].is_number_integer() || e["count"].get<long long>() < 2) {
                fail(path + ".count", "must be an integer >= 2");
            }
            spec.axes.push_back({Quantity::parse(require_string(e["name"], path + ".name"), path + ".name"),
                                 require_number(e["min"], path + ".min"),
                                 require_number(e["max"], path + ".max"),
                                 e["count"].get<std::size_t>()});
        }
    }

    // Merge: user entries replace preset entries for the same variable; p_n
    // and p1 are alternatives, so setting one drops the other. Preset entries
    // for variables the user sweeps are dropped as well.
    std::vector<FixedValue> merged(spec.fixed.begin(), spec.fixed.begin() + base_fixed);
    for (const FixedValue& f : user_fixed) {
        erase_variable(merged, f.quantity.variable);
        if (f.quantity.variable == Variable::p1) erase_variable(merged, Variable::p_n);
        if (f.quantity.variable == Variable::p_n) erase_variable(merged, Variable::p1);
    }
    if (user_axes) {
        for (const ScanAxis& a : spec.axes) {
            erase_variable(merged, a.quantity.variable);
            if (a.quantity.variable == Variable::p1) erase_variable(merged, Variable::p_n);
            if (a.quantity.variable == Variable::p_n) erase_variable(merged, Variable::p1);
        }
    }
    merged.insert(merged.end(), user_fixed.begin(), user_fixed.end());
    spec.fixed = std::move(merged);

    if (doc.contains("constants")) {
        const json& c = doc["constants"];
        if (!c.is_object()) fail("constants", "expected an object");
        for (const auto& [key, value] : c.items()) {
            if (key == "proton_mass") {
                spec.proton_mass = require_number(value, "constants.proton_mass");
                if (!(spec.proton_mass > 0.0)) fail("constants.proton_mass", "must be positive");
            } else {
                fail("constants." + key, "unknown key");
            }
        }
    }
    if (doc.contains("nonbo")) {
        const json& n = doc["nonbo"];
        if (!n.is_object()) fail("nonbo", "expected an object");
        for (const auto& [key, value] : n.items()) {
            if (key == "electron_term") {
                spec.nonbo_electron_term = parse_enum(require_string(value, "nonbo.electron_term"),
                                                      kElectronTerms, "nonbo.electron_term");
            } else {
                fail("nonbo." + key, "unknown key");
            }
        }
    }
    if (doc.contains("output")) {
        const json& o = doc["output"];
        if (!o.is_object()) fail("output", "expected an object");
        for (const auto& [key, value] : o.items()) {
            if (key == "path") spec.output_path = require_string(value, "output.path");
            else if (key == "format") {
                spec.format = parse_enum(require_string(value, "output.format"), kFormats, "output.format");
            } else {
                fail("output." + key, "unknown key");
            }
        }
    }

    validate_spec(spec);
    return spec;
}

ScanSpec load_spec(const std::string& path, const std::optional<std::string>& preset_override) {
    std::ifstream in(path);
    if (!in) throw SpecError(path + ": cannot open spec file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
        fail("$", "empty spec file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("$", std::string("malformed JSON: ") + e.what());
    }
    return parse_spec(doc, preset_override);
}

void validate_spec(const ScanSpec& spec) {
    if (spec.axes.empty()) fail("axes", "at least one swept variable is required");
    if (spec.axes.size() > 2) fail("axes", "at most two swept variables are supported");

    std::vector<Variable> seen;
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
        const ScanAxis& a = spec.axes[i];
        const std::string path = "axes[" + std::to_string(i) + "]";
        if (a.count < 2) fail(path + ".count", "must be >= 2");
        if (!std::isfinite(a.min) || !std::isfinite(a.max)) fail(path, "range must be finite");
        if (!(a.min < a.max)) fail(path, "min must be smaller than max");
        if (std::find(seen.begin(), seen.end(), a.quantity.variable) != seen.end()) {
            fail(path + ".name", "variable '" + to_string(a.quantity.variable) + "' swept twice");
        }
        seen.push_back(a.quantity.variable);
    }
    for (const FixedValue& f : spec.fixed) {
        const std::string path = "fixed." + f.quantity.name;
        if (!std::isfinite(f.value)) fail(path, "must be finite");
        if (std::find(seen.begin(), seen.end(), f.quantity.variable) != seen.end()) {
            fail(path, "variable '" + to_string(f.quantity.variable) +
                           "' is both swept and fixed (or fixed twice)");
        }
        seen.push_back(f.quantity.variable);
    }

    for (const auto& [name, v] : {std::pair{"geometry.e_pump", spec.geometry.e_pump},
                                  std::pair{"geometry.e_probe", spec.geometry.e_probe},
                                  std::pair{"geometry.n_dir", spec.geometry.n_dir},
                                  std::pair{"geometry.plane_normal", spec.geometry.plane_normal}}) {
        if (!is_unit(v, 1e-12)) fail(name, "must be a unit vector");
    }
    if (cross(spec.geometry.plane_normal, spec.geometry.e_probe).norm() < 1e-8) {
        fail("geometry.plane_normal", "must not be parallel to e_probe");
    }
    if (cross(spec.geometry.plane_normal, spec.geometry.n_dir).norm() < 1e-8) {
        fail("geometry.plane_normal", "must not be parallel to n_dir");
    }

    const auto require = [&spec](Variable v) {
        if (!spec.sets(v)) fail("fixed", "'" + to_string(v) + "' must be fixed or swept for scenario " +
                                             to_string(spec.scenario));
    };
    if (spec.sets(Variable::p_n) && spec.sets(Variable::p1)) {
        fail("fixed", "'p_n' and 'p1' are alternatives; set only one");
    }

    switch (spec.scenario) {
        case Scenario::fixed_nuclei:
            if (spec.model != Model::bo_exact) {
                fail("model", "fixed_nuclei scenario has no '" + to_string(spec.model) + "' variant");
            }
            require(Variable::p_e);
            require(Variable::r);
            return;
        case Scenario::beta_trace:
            if (spec.model == Model::nonbo) fail("model", "beta_trace does not support the nonbo model");
            break;
        case Scenario::proton_spectrum_vs_delay:
            require(Variable::p1);
            break;
        default: break;
    }
    if (spec.model == Model::nonbo && spec.parity != Parity::ungerade) {
        fail("parity", "the nonbo model is built for the ungerade state only");
    }

    require(Variable::p_e);
    if (!spec.sets(Variable::p1)) require(Variable::p_n);
    require(Variable::r0);
    const bool needs_pulse = !(spec.scenario == Scenario::beta_trace || spec.model == Model::bo_approx);
    if (needs_pulse || spec.scenario == Scenario::beta_trace) {
        if (spec.scenario != Scenario::beta_trace || spec.model == Model::bo_exact) {
            require(Variable::omega);
            require(Variable::tau);
            require(Variable::delta_r);
            require(Variable::p0);
        }
    }
}

json spec_to_json(const ScanSpec& spec) {
    json j;
    j["schema_version"] = spec.schema_version;
    if (!spec.preset.empty()) j["preset"] = spec.preset;
    j["scenario"] = to_string(spec.scenario);
    j["model"] = to_string(spec.model);
    j["parity"] = to_string(spec.parity);
    const auto vec = [](const Vec3& v) { return json::array({v.x, v.y, v.z}); };
    j["geometry"] = {{"e_pump", vec(spec.geometry.e_pump)},
                     {"e_probe", vec(spec.geometry.e_probe)},
                     {"n_dir", vec(spec.geometry.n_dir)},
                     {"plane_normal", vec(spec.geometry.plane_normal)}};
    j["axes"] = json::array();
    for (const ScanAxis& a : spec.axes) {
        j["axes"].push_back({{"name", a.quantity.name}, {"min", a.min}, {"max", a.max}, {"count", a.count}});
    }
    j["fixed"] = json::object();
    for (const FixedValue& f : spec.fixed) j["fixed"][f.quantity.name] = f.value;
    j["constants"] = {{"proton_mass", spec.proton_mass}};
    j["nonbo"] = {{"electron_term", enum_name(spec.nonbo_electron_term, kElectronTerms)}};
    j["output"] = {{"path", spec.output_path}, {"format", to_string(spec.format)}};
    return j;
}

}  // namespace h2diss
