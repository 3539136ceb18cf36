#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "h2diss/scan.hpp"

namespace h2diss {
namespace {

using nlohmann::json;

// Metadata without the run-dependent timing block, so that data files are
// reproducible byte for byte.
json stable_metadata(const json& meta) {
    json m = meta;
    m.erase("timing");
    return m;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, out);
        } else if (value.is_number_float()) {
            out << "# " << name << " = " << format_double(value.get<double>()) << '\n';
        } else if (value.is_string()) {
            out << "# " << name << " = " << value.get<std::string>() << '\n';
        } else {
            out << "# " << name << " = " << value.dump() << '\n';
        }
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> parts;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) parts.push_back(field);
    if (!line.empty() && line.back() == ',') parts.emplace_back();
    return parts;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::filesystem::path metadata_path(const std::filesystem::path& path) {
    return std::filesystem::path(path.string() + ".meta.json");
}

void write_result(const ScanResult& result, const std::filesystem::path& path,
                  OutputFormat format) {
    const std::size_t width = result.columns.size();
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        flatten(stable_metadata(result.metadata), "", out);
        for (std::size_t c = 0; c < width; ++c) out << (c ? "," : "") << result.columns[c];
        out << '\n';
        for (std::size_t r = 0; r < result.rows(); ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                out << (c ? "," : "") << format_double(result.at(r, c));
            }
            out << '\n';
        }
    } else {
        json doc;
        doc["metadata"] = stable_metadata(result.metadata);
        doc["columns"] = result.columns;
        json rows = json::array();
        for (std::size_t r = 0; r < result.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < width; ++c) row.push_back(result.at(r, c));
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump() << '\n';
    }
    write_file(path, out.str());
    write_file(metadata_path(path), result.metadata.dump(2) + "\n");
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("no column '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            table.comments.push_back(line.substr(1));
            continue;
        }
        const auto fields = split(line);
        if (table.header.empty()) {
            table.header = fields;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(table.header.size()) + " fields");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            double v = 0.0;
            const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": not a number '" + f + "'");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw std::runtime_error(path.string() + ": no header row");
    return table;
}

}  // namespace h2diss
