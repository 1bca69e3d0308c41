#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cargoflow/csv.hpp"
#include "cargoflow/error.hpp"
#include "cargoflow/record.hpp"

namespace cargoflow {

/// Source column names. Defaults follow the canonical variable schema;
/// the loading/discharge and export-loading/delivery names apply to the
/// direction-specific raw layouts. Header matching is case-insensitive
/// after whitespace normalization.
struct ColumnMapping {
  std::string year = "Year";
  std::string direction = "Direction";
  std::string route = "Route";
  std::string origin = "Origin_Node";
  std::string destination = "Destination_Node";
  std::string industry = "Industry";
  std::string commodity = "Commodity";
  std::string ffe = "FFE";
  // raw import layout
  std::string loading_port = "Port_of_Loading";
  std::string discharge_port = "Port_of_Discharge";
  // raw export layout
  std::string export_loading_port = "Export_Loading_Port";
  std::string delivery_place = "Place_of_Delivery";
};

struct IngestConfig {
  int year_min = 2019;
  int year_max = 2022;
  ColumnMapping columns;
};

/// Trims, collapses internal whitespace runs to single spaces and
/// uppercases (ASCII). Returns nullopt for empty and null-like values
/// ("", "NULL", "N/A", "NA", "-", matched case-insensitively after
/// trimming).
std::optional<std::string> normalize_text(std::string_view raw);

enum class NumericState { Missing, Invalid, Valid };

struct CandidateNumeric {
  NumericState state = NumericState::Missing;
  double value = 0.0;
};

/// A harmonized but not yet validated row. Field-level problems are
/// recorded here and tallied by validate_and_filter.
struct CandidateRecord {
  CandidateNumeric year;
  std::optional<Direction> direction;  // absent or unparseable token both
                                       // count as a missing required field
  std::optional<std::string> route;
  std::optional<std::string> origin_node;
  std::optional<std::string> destination_node;
  std::optional<std::string> industry;
  std::optional<std::string> commodity;
  CandidateNumeric ffe;
};

/// Strict numeric text parsing: decimal point only, no locale, no
/// surrounding garbage. Whitespace is handled by normalize_text first.
CandidateNumeric parse_numeric(const std::optional<std::string>& token);

/// Maps one raw direction-specific row onto a candidate: imports take
/// origin from the loading port and destination from the discharge port;
/// exports take origin from the export loading port and destination from
/// the place of delivery.
CandidateRecord harmonize(const std::map<std::string, std::string>& row,
                          Direction direction,
                          const ColumnMapping& columns = {});

/// Maps one canonical-layout row (direction carried per row).
CandidateRecord harmonize_canonical(
    const std::map<std::string, std::string>& row,
    const ColumnMapping& columns = {});

/// Harmonizes a whole parsed table. file_direction == nullopt selects
/// the canonical layout; otherwise the matching raw layout is used.
/// Throws SchemaError when a configured required column is absent from
/// the header.
std::vector<CandidateRecord> harmonize_table(
    const csv::Table& table, std::optional<Direction> file_direction,
    const ColumnMapping& columns = {});

/// Raised when no record survives validation; carries the tallies so
/// callers can still report them.
class NoSurvivorsError : public DataError {
 public:
  explicit NoSurvivorsError(IngestReport report)
      : DataError("no records survived validation"),
        report_(std::move(report)) {}
  const IngestReport& report() const { return report_; }

 private:
  IngestReport report_;
};

/// Drops candidates with missing required fields, invalid numerics,
/// nonpositive FFE or out-of-range years; retains duplicates and UNKNOWN
/// routes. Survivor order equals input order. A rejected record is
/// tallied under exactly one reason (missing field, then invalid
/// numeric, then nonpositive FFE, then year range).
std::pair<std::vector<ShipmentRecord>, IngestReport> validate_and_filter(
    std::span<const CandidateRecord> candidates, const IngestConfig& config);

/// Table 1 lookup; unlisted codes pass through flagged unclassified.
RouteTaxonomy::Entry classify_route(const std::string& code,
                                    const RouteTaxonomy& taxonomy);

}  // namespace cargoflow
