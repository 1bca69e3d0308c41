#include "cargoflow/csv.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "cargoflow/error.hpp"

namespace cargoflow::csv {
namespace {

Table parse_buffer(const std::string& buf, char delimiter) {
  Table table;
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  bool row_started = false;

  std::size_t i = 0;
  if (buf.size() >= 3 && buf.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;

  auto flush_field = [&] {
    fields.push_back(std::move(cur));
    cur.clear();
  };
  auto flush_row = [&] {
    flush_field();
    if (table.header.empty()) {
      table.header = std::move(fields);
    } else {
      table.rows.push_back(std::move(fields));
    }
    fields.clear();
    row_started = false;
  };

  for (; i < buf.size(); ++i) {
    const char c = buf[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < buf.size() && buf[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      row_started = true;
    } else if (c == delimiter) {
      flush_field();
      row_started = true;
    } else if (c == '\n') {
      if (row_started || !cur.empty() || !fields.empty()) flush_row();
    } else if (c == '\r') {
      // swallowed; the following '\n' (if any) terminates the row
      if (i + 1 >= buf.size() || buf[i + 1] != '\n') {
        if (row_started || !cur.empty() || !fields.empty()) flush_row();
      }
    } else {
      cur.push_back(c);
      row_started = true;
    }
  }
  if (in_quotes) throw SchemaError("unterminated quoted field in CSV input");
  if (row_started || !cur.empty() || !fields.empty()) flush_row();
  return table;
}

}  // namespace

Table read_table(std::istream& in, char delimiter) {
  std::string buf(std::istreambuf_iterator<char>(in),
                  std::istreambuf_iterator<char>{});
  return parse_buffer(buf, delimiter);
}

Table read_table_file(const std::filesystem::path& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  return read_table(in, delimiter);
}

std::string escape_field(const std::string& field, char delimiter) {
  const bool needs_quotes =
      field.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
      std::string::npos;
  if (!needs_quotes) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields,
               char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.put(delimiter);
    out << escape_field(fields[i], delimiter);
  }
  out.put('\n');
}

}  // namespace cargoflow::csv
