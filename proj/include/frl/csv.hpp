#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace frl {

/// RFC 4180-style rows: quoted fields, doubled quotes, CRLF tolerated.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

void write_csv_row(std::ostream& out, std::span<const std::string> row);

}  // namespace frl
