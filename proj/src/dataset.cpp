#include "frl/dataset.hpp"

#include <fstream>

#include "frl/csv.hpp"

namespace frl {

namespace {
const std::string kEmpty;
}

std::optional<std::size_t> Dataset::find_column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t Dataset::column_index(std::string_view name) const {
    if (auto idx = find_column(name)) return *idx;
    throw IoError("column '" + std::string(name) + "' not found in dataset header");
}

const std::string& Dataset::cell(std::size_t row, std::size_t col) const {
    const auto& r = rows[row];
    return col < r.size() ? r[col] : kEmpty;
}

Dataset Dataset::from_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    auto table = read_csv(in);
    if (table.empty()) throw IoError("'" + path + "' is empty; expected a CSV header row");
    Dataset ds;
    ds.columns = std::move(table.front());
    ds.rows.assign(std::make_move_iterator(table.begin() + 1), std::make_move_iterator(table.end()));
    return ds;
}

void Dataset::to_csv_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv_row(out, columns);
    for (const auto& row : rows) write_csv_row(out, row);
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace frl
