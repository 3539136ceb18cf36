#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "h2diss/scan_spec.hpp"

namespace h2diss {

/// Row-major table of (axis values..., value columns...) plus run metadata.
struct ScanResult {
    std::vector<std::string> columns;
    std::size_t axis_columns = 0;
    std::vector<double> table;
    nlohmann::json metadata;

    [[nodiscard]] std::size_t rows() const {
        return columns.empty() ? 0 : table.size() / columns.size();
    }
    [[nodiscard]] double at(std::size_t row, std::size_t col) const {
        return table[row * columns.size() + col];
    }
};

/// Evaluates the spec's model over its grid with `workers` threads
/// (<= 0: OpenMP default). Throws SpecError for incompatible spec/model
/// combinations and std::runtime_error if any grid point fails.
[[nodiscard]] ScanResult run_scan(const ScanSpec& spec, int workers = 0);

/// Writes `path` in the given format and always a `<path>.meta.json`
/// sidecar. Throws std::runtime_error naming the path on I/O failure.
void write_result(const ScanResult& result, const std::filesystem::path& path,
                  OutputFormat format);

/// Sidecar path for a result file.
[[nodiscard]] std::filesystem::path metadata_path(const std::filesystem::path& path);

/// Formats a double with 17 significant digits in scientific notation.
[[nodiscard]] std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> comments;  // without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Index of a header column; throws std::out_of_range if missing.
    [[nodiscard]] std::size_t column(const std::string& name) const;
};

/// Parses the CSV layout written by write_result().
[[nodiscard]] CsvTable read_csv(const std::filesystem::path& path);

}  // namespace h2diss
