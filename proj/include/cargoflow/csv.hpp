#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cargoflow::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC-4180-style parser: quoted fields may contain the delimiter,
/// doubled quotes and embedded newlines. Accepts LF and CRLF endings and
/// a leading UTF-8 BOM. The first record is the header; blank lines are
/// skipped. Field text is returned verbatim (no trimming).
Table read_table(std::istream& in, char delimiter = ',');
Table read_table_file(const std::filesystem::path& path, char delimiter = ',');

/// Quotes a field only when it contains the delimiter, a quote or a
/// newline, so clean numeric output stays unquoted.
std::string escape_field(const std::string& field, char delimiter = ',');

void write_row(std::ostream& out, const std::vector<std::string>& fields,
               char delimiter = ',');

}  // namespace cargoflow::csv
