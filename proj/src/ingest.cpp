#include "cargoflow/ingest.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>

namespace cargoflow {
namespace {

const char* const kNullLike[] = {"NULL", "N/A", "NA", "-"};

std::string upper_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Header cells and configured names are compared after the same
// normalization, so "origin_node" matches "Origin_Node ".
std::string header_key(std::string_view raw) {
  const auto norm = normalize_text(raw);
  return norm ? *norm : std::string{};
}

class HeaderIndex {
 public:
  explicit HeaderIndex(const std::vector<std::string>& header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      index_.emplace(header_key(header[i]), i);
    }
  }

  std::optional<std::size_t> find(const std::string& configured_name) const {
    auto it = index_.find(header_key(configured_name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(const std::string& configured_name) const {
    if (auto i = find(configured_name)) return *i;
    throw SchemaError("required column missing from header: " +
                      configured_name);
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

std::optional<std::string> cell(const std::vector<std::string>& row,
                                std::size_t idx) {
  if (idx >= row.size()) return std::nullopt;
  return normalize_text(row[idx]);
}

std::optional<std::string> lookup(const std::map<std::string, std::string>& row,
                                  const std::string& column) {
  const std::string want = header_key(column);
  for (const auto& [k, v] : row) {
    if (header_key(k) == want) return normalize_text(v);
  }
  return std::nullopt;
}

CandidateRecord assemble(std::optional<Direction> direction,
                         std::optional<std::string> year_tok,
                         std::optional<std::string> route,
                         std::optional<std::string> origin,
                         std::optional<std::string> destination,
                         std::optional<std::string> industry,
                         std::optional<std::string> commodity,
                         std::optional<std::string> ffe_tok) {
  CandidateRecord c;
  c.direction = direction;
  c.year = parse_numeric(year_tok);
  c.route = std::move(route);
  c.origin_node = std::move(origin);
  c.destination_node = std::move(destination);
  c.industry = std::move(industry);
  c.commodity = std::move(commodity);
  c.ffe = parse_numeric(ffe_tok);
  return c;
}

// Duplicate detection key: the full normalized row, byte-exact.
std::string duplicate_key(const ShipmentRecord& r) {
  std::string key;
  key += std::to_string(r.year);
  key.push_back('\x1f');
  key += to_string(r.direction);
  key.push_back('\x1f');
  key += r.route;
  key.push_back('\x1f');
  key += r.origin_node;
  key.push_back('\x1f');
  key += r.destination_node;
  key.push_back('\x1f');
  key += r.industry;
  key.push_back('\x1f');
  key.push_back(r.commodity ? '\x01' : '\x00');
  key += r.commodity.value_or("");
  key.push_back('\x1f');
  const auto bits = std::bit_cast<std::uint64_t>(r.ffe);
  key.append(reinterpret_cast<const char*>(&bits), sizeof(bits));
  return key;
}

}  // namespace

std::optional<std::string> normalize_text(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && is_space(raw[begin])) ++begin;
  while (end > begin && is_space(raw[end - 1])) --end;
  if (begin == end) return std::nullopt;

  std::string out;
  out.reserve(end - begin);
  bool pending_space = false;
  for (std::size_t i = begin; i < end; ++i) {
    if (is_space(raw[i])) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(
        std::toupper(static_cast<unsigned char>(raw[i]))));
  }
  for (const char* null_like : kNullLike) {
    if (out == null_like) return std::nullopt;
  }
  return out;
}

CandidateNumeric parse_numeric(const std::optional<std::string>& token) {
  if (!token) return {NumericState::Missing, 0.0};
  const std::string& s = *token;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    return {NumericState::Invalid, 0.0};
  }
  return {NumericState::Valid, value};
}

CandidateRecord harmonize(const std::map<std::string, std::string>& row,
                          Direction direction, const ColumnMapping& columns) {
  const bool is_import = direction == Direction::Import;
  return assemble(direction, lookup(row, columns.year),
                  lookup(row, columns.route),
                  lookup(row, is_import ? columns.loading_port
                                        : columns.export_loading_port),
                  lookup(row, is_import ? columns.discharge_port
                                        : columns.delivery_place),
                  lookup(row, columns.industry),
                  lookup(row, columns.commodity), lookup(row, columns.ffe));
}

CandidateRecord harmonize_canonical(
    const std::map<std::string, std::string>& row,
    const ColumnMapping& columns) {
  const auto dir_tok = lookup(row, columns.direction);
  std::optional<Direction> dir;
  if (dir_tok) dir = parse_direction(*dir_tok);
  return assemble(dir, lookup(row, columns.year),
                  lookup(row, columns.route), lookup(row, columns.origin),
                  lookup(row, columns.destination),
                  lookup(row, columns.industry),
                  lookup(row, columns.commodity), lookup(row, columns.ffe));
}

std::vector<CandidateRecord> harmonize_table(
    const csv::Table& table, std::optional<Direction> file_direction,
    const ColumnMapping& columns) {
  const HeaderIndex header(table.header);

  const std::size_t year_i = header.require(columns.year);
  const std::size_t route_i = header.require(columns.route);
  const std::size_t industry_i = header.require(columns.industry);
  const std::size_t ffe_i = header.require(columns.ffe);
  const std::optional<std::size_t> commodity_i = header.find(columns.commodity);

  std::size_t origin_i = 0;
  std::size_t destination_i = 0;
  std::optional<std::size_t> direction_i;
  if (!file_direction) {
    direction_i = header.require(columns.direction);
    origin_i = header.require(columns.origin);
    destination_i = header.require(columns.destination);
  } else if (*file_direction == Direction::Import) {
    origin_i = header.require(columns.loading_port);
    destination_i = header.require(columns.discharge_port);
  } else {
    origin_i = header.require(columns.export_loading_port);
    destination_i = header.require(columns.delivery_place);
  }

  std::vector<CandidateRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::optional<Direction> dir = file_direction;
    if (direction_i) {
      const auto tok = cell(row, *direction_i);
      dir = tok ? parse_direction(*tok) : std::nullopt;
    }
    out.push_back(assemble(
        dir, cell(row, year_i), cell(row, route_i),
        cell(row, origin_i), cell(row, destination_i), cell(row, industry_i),
        commodity_i ? cell(row, *commodity_i) : std::nullopt,
        cell(row, ffe_i)));
  }
  return out;
}

std::pair<std::vector<ShipmentRecord>, IngestReport> validate_and_filter(
    std::span<const CandidateRecord> candidates, const IngestConfig& config) {
  std::vector<ShipmentRecord> records;
  records.reserve(candidates.size());
  IngestReport report;

  for (const CandidateRecord& c : candidates) {
    const bool missing = !c.direction.has_value() || !c.route ||
                         !c.origin_node || !c.destination_node ||
                         !c.industry ||
                         c.year.state == NumericState::Missing ||
                         c.ffe.state == NumericState::Missing;
    if (missing) {
      ++report.rejected_missing_field;
      continue;
    }
    const bool year_integral =
        c.year.state == NumericState::Valid &&
        c.year.value == std::floor(c.year.value) &&
        std::abs(c.year.value) < 1e9;
    if (c.year.state == NumericState::Invalid ||
        c.ffe.state == NumericState::Invalid || !year_integral) {
      ++report.rejected_invalid_numeric;
      continue;
    }
    if (c.ffe.value <= 0.0) {
      ++report.rejected_nonpositive_ffe;
      continue;
    }
    const int year = static_cast<int>(c.year.value);
    if (year < config.year_min || year > config.year_max) {
      ++report.rejected_year_out_of_range;
      continue;
    }

    ShipmentRecord r;
    r.year = year;
    r.direction = *c.direction;
    r.route = *c.route;
    r.origin_node = *c.origin_node;
    r.destination_node = *c.destination_node;
    r.industry = *c.industry;
    r.commodity = c.commodity;
    r.ffe = c.ffe.value;
    if (r.route == "UNKNOWN") {
      ++report.unknown_route_count;
      report.unknown_route_ffe += r.ffe;
    }
    records.push_back(std::move(r));
  }
  report.accepted_count = records.size();

  std::unordered_map<std::string, std::uint64_t> seen;
  for (const ShipmentRecord& r : records) {
    const auto count = ++seen[duplicate_key(r)];
    if (count > 1) ++report.duplicate_count;
  }

  if (records.empty()) throw NoSurvivorsError(report);
  return {std::move(records), report};
}

RouteTaxonomy::Entry classify_route(const std::string& code,
                                    const RouteTaxonomy& taxonomy) {
  return taxonomy.classify(code);
}

}  // namespace cargoflow
