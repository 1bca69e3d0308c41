#include "cargoflow/record.hpp"

#include "cargoflow/csv.hpp"
#include "cargoflow/error.hpp"
#include "cargoflow/ingest.hpp"

namespace cargoflow {

std::string_view to_string(Direction d) {
  return d == Direction::Import ? "IMPORT" : "EXPORT";
}

std::optional<Direction> parse_direction(std::string_view normalized_token) {
  if (normalized_token == "IMPORT") return Direction::Import;
  if (normalized_token == "EXPORT") return Direction::Export;
  return std::nullopt;
}

RouteTaxonomy RouteTaxonomy::builtin() {
  RouteTaxonomy t;
  t.add("W1", "Europe – West Africa");
  t.add("W2", "Middle East – West Africa");
  t.add("W3", "Asia – West Africa (via Suez Canal)");
  t.add("W4", "Americas – West Africa");
  t.add("W5", "South/East Africa – West Africa");
  t.add("X6", "Intra-Africa / Short Sea");
  return t;
}

RouteTaxonomy RouteTaxonomy::from_csv_file(const std::filesystem::path& path,
                                           char delimiter) {
  const csv::Table table = csv::read_table_file(path, delimiter);
  RouteTaxonomy t;
  for (const auto& row : table.rows) {
    if (row.size() < 2) {
      throw SchemaError("taxonomy file needs code,description rows: " +
                        path.string());
    }
    const auto code = normalize_text(row[0]);
    if (!code) continue;
    t.add(*code, row[1]);
  }
  return t;
}

void RouteTaxonomy::add(std::string code, std::string description) {
  entries_[std::move(code)] = std::move(description);
}

RouteTaxonomy::Entry RouteTaxonomy::classify(const std::string& code) const {
  if (auto it = entries_.find(code); it != entries_.end()) {
    return {it->second, true};
  }
  return {code, false};
}

void IngestReport::merge(const IngestReport& other) {
  accepted_count += other.accepted_count;
  rejected_missing_field += other.rejected_missing_field;
  rejected_invalid_numeric += other.rejected_invalid_numeric;
  rejected_nonpositive_ffe += other.rejected_nonpositive_ffe;
  rejected_year_out_of_range += other.rejected_year_out_of_range;
  duplicate_count += other.duplicate_count;
  unknown_route_count += other.unknown_route_count;
  unknown_route_ffe += other.unknown_route_ffe;
}

}  // namespace cargoflow
