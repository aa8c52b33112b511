#include "frl/csv.hpp"

#include <istream>
#include <ostream>

namespace frl {

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;  // true once the current row has content
    char ch;
    while (in.get(ch)) {
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                quoted = true;
                any = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                if (any || !field.empty() || !row.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    rows.push_back(std::move(row));
                    row.clear();
                    any = false;
                }
                break;
            default:
                field.push_back(ch);
                any = true;
                break;
        }
    }
    if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

static bool needs_quotes(const std::string& f) {
    return f.find_first_of(",\"\r\n") != std::string::npos;
}

void write_csv_row(std::ostream& out, std::span<const std::string> row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out.put(',');
        const std::string& f = row[i];
        if (needs_quotes(f)) {
            out.put('"');
            for (char c : f) {
                if (c == '"') out.put('"');
                out.put(c);
            }
            out.put('"');
        } else {
            out << f;
        }
    }
    out.put('\n');
}

}  // namespace frl
