#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frl {

/// I/O failures (unreadable files, malformed inputs). Mapped to exit code 2
/// by the CLI, as opposed to configuration errors (exit code 1).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A CSV table with a header row. Records are addressed by row index.
struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> find_column(std::string_view name) const;

    /// Throws IoError naming the column when it is absent.
    std::size_t column_index(std::string_view name) const;

    /// Cell access tolerant of short rows (missing trailing cells read as "").
    const std::string& cell(std::size_t row, std::size_t col) const;

    static Dataset from_csv_file(const std::string& path);
    void to_csv_file(const std::string& path) const;
};

}  // namespace frl
